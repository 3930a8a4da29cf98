#include "szt/matroid.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace szt {

std::vector<std::vector<int>> enumerate_bases(const Arrangement& A) {
  const int m = A.size();
  const int r = A.rank();
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(pick.size()) == r) {
      if (A.rank_of(pick) == r) out.push_back(pick);
      return;
    }
    // not enough elements left to finish
    for (int i = start; i <= m - (r - static_cast<int>(pick.size())); ++i) {
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

BasisRecord classify_activities(const Arrangement& A, const std::vector<int>& basis) {
  const int m = A.size();
  const int r = A.rank();
  if (static_cast<int>(basis.size()) != r || A.rank_of(basis) != r)
    throw std::invalid_argument("not a basis of the arrangement");
  BasisRecord rec;
  rec.basis = basis;
  std::sort(rec.basis.begin(), rec.basis.end());

  std::vector<bool> in_basis(m, false);
  for (int b : rec.basis) in_basis[b] = true;

  std::vector<RatVec> cols;
  for (int b : rec.basis) cols.push_back(A.hyperplane(b).normal);

  for (int h = 0; h < m; ++h) {
    if (in_basis[h]) continue;
    auto sol = solve_columns(cols, A.hyperplane(h).normal);
    if (!sol) throw std::logic_error("basis does not span the arrangement");
    // circuit of basis + h: h together with the support of the expansion
    int min_member = h;
    for (int j = 0; j < r; ++j)
      if ((*sol)[j] != 0) min_member = std::min(min_member, rec.basis[j]);
    (min_member == h ? rec.ext_active : rec.ext_passive).push_back(h);
  }

  for (int j = 0; j < r; ++j) {
    const int h = rec.basis[j];
    RowReducer span(A.dim());
    for (int l = 0; l < r; ++l)
      if (l != j) span.add_row(A.hyperplane(rec.basis[l]).normal);
    int min_replacement = -1;
    for (int h2 = 0; h2 < m && min_replacement == -1; ++h2) {
      RowReducer probe = span;
      if (probe.add_row(A.hyperplane(h2).normal)) min_replacement = h2;
    }
    (min_replacement == h ? rec.int_active : rec.int_passive).push_back(h);
  }
  return rec;
}

std::vector<BasisRecord> all_activities(const Arrangement& A) {
  std::vector<BasisRecord> out;
  for (const auto& b : enumerate_bases(A)) out.push_back(classify_activities(A, b));
  return out;
}

namespace {

TuttePoly tutte_subset_sum(const Arrangement& A) {
  const int m = A.size();
  if (m > 20) throw std::invalid_argument("too many hyperplanes for subset enumeration");
  const int r = A.rank();
  const BiPoly xm1 = BiPoly::monomial(1, 0) - BiPoly::constant(1);
  const BiPoly ym1 = BiPoly::monomial(0, 1) - BiPoly::constant(1);
  std::vector<BiPoly> xp(r + 1), yp(m + 1);
  for (int i = 0; i <= r; ++i) xp[i] = pow(xm1, i);
  for (int i = 0; i <= m; ++i) yp[i] = pow(ym1, i);
  TuttePoly T;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    const int rk = A.rank_of_mask(mask);
    const int sz = __builtin_popcountll(mask);
    T += xp[r - rk] * yp[sz - rk];
  }
  return T;
}

class DeletionContraction {
 public:
  TuttePoly run(const Arrangement& A) {
    if (A.size() == 0) return BiPoly::constant(1);
    const std::string key = A.canonical_key();
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    const int last = A.size() - 1;
    TuttePoly T;
    if (A.is_loop(last)) {
      T = run(A.deleted(last)) * BiPoly::monomial(0, 1);
    } else if (A.is_coloop(last)) {
      T = run(A.restricted(last)) * BiPoly::monomial(1, 0);
    } else {
      T = run(A.deleted(last)) + run(A.restricted(last));
    }
    std::lock_guard<std::mutex> lock(mu_);
    memo_.emplace(key, T);
    return T;
  }

 private:
  std::unordered_map<std::string, TuttePoly> memo_;
  std::mutex mu_;
};

TuttePoly tutte_activity(const Arrangement& A) {
  TuttePoly T;
  for (const auto& rec : all_activities(A))
    T.add_term(static_cast<int>(rec.int_active.size()), static_cast<int>(rec.ext_active.size()),
               1);
  return T;
}

}  // namespace

TuttePoly tutte(const Arrangement& A, TutteMethod method) {
  switch (method) {
    case TutteMethod::SubsetSum:
      return tutte_subset_sum(A);
    case TutteMethod::DeletionContraction:
      return DeletionContraction().run(A);
    case TutteMethod::Activity:
      return tutte_activity(A);
  }
  throw std::logic_error("unknown method");
}

std::vector<Int> characteristic_poly(const Arrangement& A) {
  const int r = A.rank();
  const TuttePoly T = tutte(A);
  // signed evaluation at x = 1 - s, y = 0
  std::vector<Int> chi(r + 1, Int(0));
  for (const auto& [k, c] : T.terms()) {
    if (k.second != 0) continue;
    const int a = k.first;
    for (int j = 0; j <= a; ++j) {
      // (1-s)^a expands with alternating binomials
      Int term = c * binomial(a, j);
      if (j % 2 == 1) term = -term;
      chi[j] += (r % 2 == 1) ? -term : term;
    }
  }
  return chi;
}

TuttePoly thicken_tutte(const TuttePoly& T, int rank, int d) {
  if (d != 2) throw std::invalid_argument("only doubling is supported");
  if (T.deg1() > rank) throw std::invalid_argument("x degree exceeds the rank");
  const BiPoly xpy = BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1);
  const BiPoly yp1 = BiPoly::monomial(0, 1) + BiPoly::constant(1);
  std::vector<BiPoly> xpyp(rank + 1), yp1p(rank + 1);
  for (int i = 0; i <= rank; ++i) {
    xpyp[i] = pow(xpy, i);
    yp1p[i] = pow(yp1, i);
  }
  TuttePoly out;
  for (const auto& [k, c] : T.terms()) {
    const auto [a, b] = k;
    // (x+y)^a (1+y)^(rank-a) y^(2b), already denominator free
    out += xpyp[a] * yp1p[rank - a] * BiPoly::monomial(0, 2 * b) * c;
  }
  return out;
}

}  // namespace szt
