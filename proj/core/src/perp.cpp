#include "szt/perp.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace szt {

std::vector<XExp> x_monomials(int n, int deg) {
  std::vector<XExp> out;
  if (deg < 0) return out;
  if (n == 0) {
    if (deg == 0) out.push_back({});
    return out;
  }
  XExp cur(n, 0);
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == n - 1) {
      cur[pos] = rest;
      out.push_back(cur);
      return;
    }
    for (int e = rest; e >= 0; --e) {
      cur[pos] = e;
      self(self, pos + 1, rest - e);
    }
  };
  rec(rec, 0, deg);
  return out;
}

std::vector<ThetaWord> theta_words(int n, int len) {
  std::vector<ThetaWord> out;
  if (len < 0 || len > n) return out;
  ThetaWord cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= n - (len - static_cast<int>(cur.size())); ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

PerpSystem::PerpSystem(Arrangement A, int k) : A_(std::move(A)), k_(k) {
  if (k < -1) throw std::invalid_argument("offset k must be at least -1");
  flats_ = A_.flats_dim_ge1();
  const int n = A_.dim();
  std::set<std::string> seen;
  auto emit = [&](SuperElement op, int flat, int p, Bidegree bd) {
    if (op.is_zero()) return;
    if (!seen.insert(op.str()).second) return;  // drop exact duplicates
    ops_.push_back(ConstraintOperator{std::move(op), flat, p, bd});
  };

  for (std::size_t fi = 0; fi < flats_.size(); ++fi) {
    const Flat& F = flats_[fi];
    const int p = F.rho + k_;
    if (p <= 0) continue;
    const int d = F.dim();
    std::vector<SuperElement> beta, tau;
    for (const auto& v : F.subspace_basis) {
      beta.push_back(SuperElement::linear_form(v));
      tau.push_back(SuperElement::linear_theta(v));
    }
    // powers of each direction form, reused across multi-indices
    std::vector<std::vector<SuperElement>> bpow(d);
    for (int j = 0; j < d; ++j) {
      bpow[j].push_back(SuperElement::constant(n, 1));
      for (int e = 1; e <= p; ++e) bpow[j].push_back(bpow[j][e - 1] * beta[j]);
    }
    std::vector<int> idx(d, 0);
    auto product_for = [&](const std::vector<int>& gamma, int skip) {
      SuperElement prod = SuperElement::constant(n, 1);
      for (int j = 0; j < d; ++j) {
        int e = gamma[j] - (j == skip ? 1 : 0);
        if (e > 0) prod = prod * bpow[j][e];
      }
      return prod;
    };
    auto rec = [&](auto&& self, int pos, int rest) -> void {
      if (pos == d - 1) {
        idx[pos] = rest;
        emit(product_for(idx, -1), static_cast<int>(fi), p, Bidegree{p, 0});
        SuperElement mixed(n);
        for (int j = 0; j < d; ++j)
          if (idx[j] >= 1) mixed += product_for(idx, j) * tau[j] * Rat(idx[j]);
        emit(std::move(mixed), static_cast<int>(fi), p, Bidegree{p - 1, 1});
        return;
      }
      for (int e = rest; e >= 0; --e) {
        idx[pos] = e;
        self(self, pos + 1, rest - e);
      }
    };
    if (d > 0) rec(rec, 0, p);
  }
}

int PerpSystem::max_bos() const {
  return std::max(0, A_.size() + k_ - 1);
}

const PerpSystem::BosKernel& PerpSystem::bos_kernel(int deg) const {
  auto it = bos_cache_.find(deg);
  if (it != bos_cache_.end()) return it->second;
  BosKernel bk;
  bk.mons = x_monomials(A_.dim(), deg);
  for (std::size_t c = 0; c < bk.mons.size(); ++c) bk.index.emplace(bk.mons[c], static_cast<int>(c));
  const int ncols = static_cast<int>(bk.mons.size());
  RowReducer red(ncols);
  for (const auto& con : ops_) {
    if (con.bd.ferm != 0 || con.bd.bos > deg) continue;
    if (red.full()) break;
    // rows indexed by target monomials of degree deg - p
    const auto targets = x_monomials(A_.dim(), deg - con.bd.bos);
    std::map<XExp, int> tindex;
    for (std::size_t t = 0; t < targets.size(); ++t) tindex.emplace(targets[t], static_cast<int>(t));
    std::vector<RatVec> rows(targets.size(), RatVec(ncols, Rat(0)));
    for (int c = 0; c < ncols; ++c) {
      for (const auto& [tk, coeff] : con.op.terms()) {
        bool dead = false;
        Int scale = 1;
        XExp e(A_.dim());
        for (int i = 0; i < A_.dim(); ++i) {
          if (bk.mons[c][i] < tk.x[i]) {
            dead = true;
            break;
          }
          e[i] = bk.mons[c][i] - tk.x[i];
          for (int a = 0; a < tk.x[i]; ++a) scale *= bk.mons[c][i] - a;
        }
        if (dead) continue;
        rows[tindex.at(e)][c] += coeff * Rat(scale);
      }
    }
    for (auto& row : rows) {
      if (red.full()) break;
      red.add_row(row);
    }
  }
  bk.basis = red.kernel();
  return bos_cache_.emplace(deg, std::move(bk)).first->second;
}

void PerpSystem::feed_mixed_rows(int deg, int len, RowReducer& red) const {
  const int n = A_.dim();
  const BosKernel& bk = bos_kernel(deg);
  const int nb = static_cast<int>(bk.basis.size());
  const auto words = theta_words(n, len);
  const int nw = static_cast<int>(words.size());
  std::map<ThetaWord, int> windex;
  for (int w = 0; w < nw; ++w) windex.emplace(words[w], w);
  const int ncols = nb * nw;  // column (a, K) at a * nw + K

  for (const auto& con : ops_) {
    if (con.bd.ferm != 1 || con.bd.bos > deg) continue;
    if (red.full()) return;
    const int pb = con.bd.bos;  // bosonic degree of the operator
    // group operator terms by their theta index
    std::map<int, std::vector<std::pair<XExp, Rat>>> groups;
    for (const auto& [tk, coeff] : con.op.terms()) groups[tk.th.at(0)].emplace_back(tk.x, coeff);
    // action of each group's polynomial part on the kernel basis vectors
    const auto targets = x_monomials(n, deg - pb);
    std::map<XExp, int> tindex;
    for (std::size_t t = 0; t < targets.size(); ++t) tindex.emplace(targets[t], static_cast<int>(t));
    const auto tword = theta_words(n, len - 1);
    std::map<ThetaWord, int> twindex;
    for (std::size_t t = 0; t < tword.size(); ++t) twindex.emplace(tword[t], static_cast<int>(t));
    // M[j] has one column per kernel vector, rows over target monomials
    std::map<int, std::vector<RatVec>> M;
    for (const auto& [j, terms] : groups) {
      auto& mat = M[j];
      mat.assign(targets.size(), RatVec(nb, Rat(0)));
      for (int a = 0; a < nb; ++a) {
        for (std::size_t c = 0; c < bk.mons.size(); ++c) {
          if (bk.basis[a][c] == 0) continue;
          for (const auto& [ax, coeff] : terms) {
            bool dead = false;
            Int scale = 1;
            XExp e(n);
            for (int i = 0; i < n; ++i) {
              if (bk.mons[c][i] < ax[i]) {
                dead = true;
                break;
              }
              e[i] = bk.mons[c][i] - ax[i];
              for (int q = 0; q < ax[i]; ++q) scale *= bk.mons[c][i] - q;
            }
            if (dead) continue;
            mat[tindex.at(e)][a] += coeff * bk.basis[a][c] * Rat(scale);
          }
        }
      }
    }
    // assemble rows: one per (target monomial, target word) pair
    std::vector<RatVec> rows(targets.size() * tword.size(), RatVec(ncols, Rat(0)));
    for (int w = 0; w < nw; ++w) {
      const ThetaWord& K = words[w];
      for (std::size_t pos = 0; pos < K.size(); ++pos) {
        auto mit = M.find(K[pos]);
        if (mit == M.end()) continue;
        const int sign = pos % 2 == 0 ? 1 : -1;
        ThetaWord L = K;
        L.erase(L.begin() + pos);
        const int li = twindex.at(L);
        for (std::size_t t = 0; t < targets.size(); ++t)
          for (int a = 0; a < nb; ++a) {
            const Rat& v = mit->second[t][a];
            if (v == 0) continue;
            Rat& slot = rows[t * tword.size() + li][a * nw + w];
            slot += sign > 0 ? v : -v;
          }
      }
    }
    for (auto& row : rows) {
      if (red.full()) return;
      red.add_row(row);
    }
  }
}

int PerpSystem::slice_dim(Bidegree bd) const {
  const int n = A_.dim();
  if (bd.bos < 0 || bd.ferm < 0 || bd.ferm > n) return 0;
  const BosKernel& bk = bos_kernel(bd.bos);
  const int nb = static_cast<int>(bk.basis.size());
  if (nb == 0) return 0;
  if (bd.ferm == 0) return nb;
  const int nw = static_cast<int>(theta_words(n, bd.ferm).size());
  RowReducer red(nb * nw);
  feed_mixed_rows(bd.bos, bd.ferm, red);
  return red.cols() - red.rank();
}

std::vector<SuperElement> PerpSystem::kernel_basis(Bidegree bd) const {
  const int n = A_.dim();
  std::vector<SuperElement> out;
  if (bd.bos < 0 || bd.ferm < 0 || bd.ferm > n) return out;
  const BosKernel& bk = bos_kernel(bd.bos);
  const int nb = static_cast<int>(bk.basis.size());
  if (nb == 0) return out;
  const auto words = theta_words(n, bd.ferm);
  const int nw = static_cast<int>(words.size());

  RowReducer red(nb * nw);
  feed_mixed_rows(bd.bos, bd.ferm, red);
  const auto compressed = red.kernel();

  // expand to monomial coordinates of the full slice and canonicalize
  std::vector<TermKey> slice;
  std::map<TermKey, int> sindex;
  for (const auto& mu : bk.mons)
    for (const auto& K : words) {
      sindex.emplace(TermKey{mu, K}, static_cast<int>(slice.size()));
      slice.push_back(TermKey{mu, K});
    }
  RowReducer canon(static_cast<int>(slice.size()));
  for (const auto& cv : compressed) {
    RatVec full(slice.size(), Rat(0));
    for (int a = 0; a < nb; ++a)
      for (int w = 0; w < nw; ++w) {
        const Rat& c = cv[a * nw + w];
        if (c == 0) continue;
        for (std::size_t mc = 0; mc < bk.mons.size(); ++mc) {
          if (bk.basis[a][mc] == 0) continue;
          full[sindex.at(TermKey{bk.mons[mc], words[w]})] += c * bk.basis[a][mc];
        }
      }
    canon.add_row(full);
  }
  for (const auto& row : canon.rref()) {
    SuperElement f(n);
    for (std::size_t c = 0; c < slice.size(); ++c)
      if (row[c] != 0) f.add_term(slice[c], row[c]);
    out.push_back(std::move(f));
  }
  return out;
}

BigradedSeries PerpSystem::hilbert() const {
  BigradedSeries S;
  for (int i = 0; i <= max_bos(); ++i)
    for (int j = 0; j <= A_.dim(); ++j) {
      const int d = slice_dim(Bidegree{i, j});
      if (d > 0) S.add_term(i, j, d);
    }
  return S;
}

bool PerpSystem::contains(const SuperElement& f) const {
  if (f.nvars() != A_.dim()) throw std::invalid_argument("variable count mismatch");
  // operators of too large a bidegree annihilate the component for free
  for (const auto& [bd, comp] : f.components())
    for (const auto& con : ops_) {
      if (con.bd.bos > bd.bos || con.bd.ferm > bd.ferm) continue;
      if (!con.op.apply_to(comp).is_zero()) return false;
    }
  return true;
}

}  // namespace szt
