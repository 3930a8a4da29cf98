#include "szt/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace szt {

BigradedSeries hilbert_via_tutte(const Arrangement& A) {
  const int m = A.size();
  const int r = A.rank();
  if (m > 20) return hilbert_from_tutte_poly(tutte(A), m, r);
  const BiPoly onemq = BiPoly::constant(1) - BiPoly::monomial(1, 0);
  const BiPoly onept = BiPoly::constant(1) + BiPoly::monomial(0, 1);
  std::vector<BiPoly> qp(m + 1), np(m + 1), tp(r + 1);
  for (int i = 0; i <= m; ++i) {
    qp[i] = BiPoly::monomial(i, 0);
    np[i] = pow(onemq, i);
  }
  for (int i = 0; i <= r; ++i) tp[i] = pow(onept, i);
  BigradedSeries S;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    const int rk = A.rank_of_mask(mask);
    const int sz = __builtin_popcountll(mask);
    S += qp[m - sz] * np[sz - rk] * tp[rk];
  }
  for (const auto& [k, c] : S.terms())
    if (c < 0) throw std::logic_error("negative coefficient in Hilbert series");
  return S;
}

BigradedSeries hilbert_from_tutte_poly(const TuttePoly& T, int m, int r) {
  const BiPoly head = BiPoly::constant(1) + BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1);
  const BiPoly onept = BiPoly::constant(1) + BiPoly::monomial(0, 1);
  std::vector<BiPoly> hp(r + 1), tp(r + 1);
  for (int i = 0; i <= r; ++i) {
    hp[i] = pow(head, i);
    tp[i] = pow(onept, i);
  }
  BigradedSeries S;
  for (const auto& [k, c] : T.terms()) {
    const auto [a, b] = k;
    if (a > r || b > m - r)
      throw std::invalid_argument("Tutte term degree incompatible with the given rank");
    // (1+q+t)^a (1+t)^(r-a) q^(m-r-b), the substituted monomial cleared of
    // denominators
    S += hp[a] * tp[r - a] * BiPoly::monomial(m - r - b, 0) * c;
  }
  return S;
}

BigradedSeries RecursionEngine::hilbert(const Arrangement& A) {
  if (A.size() == 0) return BiPoly::constant(1);
  const std::string key = A.canonical_key();
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const int last = A.size() - 1;
  BigradedSeries S;
  if (A.is_loop(last)) {
    S = hilbert(A.deleted(last));
  } else if (A.is_coloop(last)) {
    S = hilbert(A.restricted(last)) *
        (BiPoly::constant(1) + BiPoly::monomial(1, 0) + BiPoly::monomial(0, 1));
  } else {
    S = hilbert(A.deleted(last)) * BiPoly::monomial(1, 0) +
        hilbert(A.restricted(last)) * (BiPoly::constant(1) + BiPoly::monomial(0, 1));
  }
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(key, S);
  return S;
}

BigradedSeries hilbert_via_recursion(const Arrangement& A) {
  RecursionEngine eng;
  return eng.hilbert(A);
}

std::vector<Int> generic_fvector(const Arrangement& A) {
  const int m = A.size();
  const int n = A.dim();
  if (m > 20) throw std::invalid_argument("too many hyperplanes for subset enumeration");
  // f_(n-i) is the t^i coefficient of sum (1+t)^|A| over independent A
  std::vector<Int> by_size(n + 1, Int(0));
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
    const int sz = __builtin_popcountll(mask);
    if (sz > n) continue;
    if (A.rank_of_mask(mask) == sz) by_size[sz] += 1;
  }
  std::vector<Int> f(n + 1, Int(0));
  for (int sz = 0; sz <= n; ++sz)
    for (int i = 0; i <= sz; ++i) f[n - i] += by_size[sz] * binomial(sz, i);
  return f;
}

BigradedSeries classical_external_series(const Arrangement& A) {
  const int m = A.size();
  const int r = A.rank();
  const TuttePoly T = tutte(A);
  const BiPoly onepq = BiPoly::constant(1) + BiPoly::monomial(1, 0);
  std::vector<BiPoly> qp(r + 1);
  for (int i = 0; i <= r; ++i) qp[i] = pow(onepq, i);
  BigradedSeries S;
  for (const auto& [k, c] : T.terms()) {
    const auto [a, b] = k;
    S += qp[a] * BiPoly::monomial(m - r - b, 0) * c;
  }
  return S;
}

TopCheck top_summand_check(const Arrangement& A, const BigradedSeries& hilb) {
  TopCheck out;
  const int m = A.size();
  const int r = A.rank();
  const int top = hilb.total_degree();
  for (const auto& [k, c] : hilb.terms())
    if (k.first + k.second == top) out.top.add_term(k.first, k.second, c);
  // (-1)^r q^(m-r) t^r chi(-q/t) expands to sum_j chi_j (-1)^(r+j) q^(m-r+j) t^(r-j)
  const auto chi = characteristic_poly(A);
  for (int j = 0; j < static_cast<int>(chi.size()); ++j) {
    Int c = chi[j];
    if ((r + j) % 2 == 1) c = -c;
    out.predicted.add_term(m - r + j, r - j, c);
  }
  out.match = out.top == out.predicted;
  return out;
}

DoubledRegions doubled_region_check(const Arrangement& A, const BigradedSeries& hilb) {
  DoubledRegions out;
  out.dimension = hilb.eval(Int(1), Int(1));
  const Arrangement D = A.doubled();
  const int m = A.size();
  const int r = A.rank();
  if (2 * m <= 20) {
    Int count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << (2 * m)); ++mask)
      if (D.rank_of_mask(mask) == __builtin_popcountll(mask)) count += 1;
    out.doubled_independent = count;
  } else {
    // one independent set of the doubled arrangement per independent set of
    // the original with a choice of copy for each element
    Int count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << m); ++mask) {
      const int sz = __builtin_popcountll(mask);
      if (A.rank_of_mask(mask) == sz) count += Int(1) << sz;
    }
    out.doubled_independent = count;
  }
  out.count_match = out.dimension == out.doubled_independent;

  for (const auto& [k, c] : hilb.terms()) out.substituted.add_term(2 * k.first + k.second, 0, c);
  const TuttePoly T2 = 2 * m <= 20 ? tutte(D, TutteMethod::SubsetSum) : thicken_tutte(tutte(A), r, 2);
  const BiPoly onepq = BiPoly::constant(1) + BiPoly::monomial(1, 0);
  for (const auto& [k, c] : T2.terms()) {
    const auto [a, b] = k;
    out.doubled_external += pow(onepq, a) * BiPoly::monomial(2 * m - r - b, 0) * c;
  }
  out.series_match = out.substituted == out.doubled_external;
  return out;
}

ConjectureReport internal_variant_check(const Arrangement& A) {
  ConjectureReport out;
  out.lhs = PerpSystem(A, 0).hilbert();
  const int m = A.size();
  const int r = A.rank();
  const TuttePoly T = tutte(A);
  const BiPoly onept = BiPoly::constant(1) + BiPoly::monomial(0, 1);
  for (const auto& [k, c] : T.terms()) {
    const auto [a, b] = k;
    if (a > r || b > m - r) throw std::logic_error("Tutte degrees out of range");
    out.rhs += pow(onept, r - a) * BiPoly::monomial(m - r - b, 0) * c;
  }
  out.equal = out.lhs == out.rhs;
  return out;
}

namespace {

void check_sequence(const std::map<int, Int>& seq, const std::string& name,
                    LogConcavityReport& rep) {
  if (seq.empty()) return;
  const int lo = seq.begin()->first;
  const int hi = seq.rbegin()->first;
  std::vector<Int> v;
  for (int i = lo; i <= hi; ++i) {
    auto it = seq.find(i);
    v.push_back(it == seq.end() ? Int(0) : it->second);
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) {
      rep.ok = false;
      rep.violations.push_back(name + ": internal zero in the support");
      return;
    }
  }
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] * v[i] < v[i - 1] * v[i + 1]) {
      rep.ok = false;
      rep.violations.push_back(name + ": log concavity fails at position " +
                               std::to_string(lo + static_cast<int>(i)));
    }
  }
}

}  // namespace

LogConcavityReport log_concavity(const BigradedSeries& S) {
  LogConcavityReport rep;
  std::map<int, std::map<int, Int>> rows, cols, diags;
  for (const auto& [k, c] : S.terms()) {
    rows[k.second][k.first] = c;
    cols[k.first][k.second] = c;
    diags[k.first + k.second][k.first] = c;
  }
  for (const auto& [t, seq] : rows) check_sequence(seq, "row t^" + std::to_string(t), rep);
  for (const auto& [q, seq] : cols) check_sequence(seq, "column q^" + std::to_string(q), rep);
  for (const auto& [d, seq] : diags)
    check_sequence(seq, "diagonal degree " + std::to_string(d), rep);
  return rep;
}

GraphRegionReport graph_region_identity(int nvertices,
                                        const std::vector<std::pair<int, int>>& edges) {
  GraphRegionReport out;
  const Arrangement A = Arrangement::from_graph(nvertices, edges);
  const int r = A.rank();
  out.connected = r == nvertices - 1;
  out.series_value = hilbert_via_tutte(A).eval(Int(1), Int(1));
  const Rat v = tutte(A).eval(Rat(3, 2), Rat(1));
  Rat scaled = v;
  for (int i = 0; i < r; ++i) scaled *= 2;
  if (scaled.get_den() != 1) throw std::logic_error("region identity value is not an integer");
  out.tutte_value = scaled.get_num();
  out.equal = out.series_value == out.tutte_value;
  return out;
}

}  // namespace szt
