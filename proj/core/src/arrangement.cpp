#include "szt/arrangement.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace szt {

bool Hyperplane::is_loop() const {
  return std::all_of(normal.begin(), normal.end(), [](const Rat& x) { return x == 0; });
}

Arrangement::Arrangement(int n, std::vector<Hyperplane> hs) : n_(n), hs_(std::move(hs)) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
  for (const auto& h : hs_)
    if (static_cast<int>(h.normal.size()) != n)
      throw std::invalid_argument("normal vector length does not match ambient dimension");
}

int Arrangement::rank() const {
  RowReducer red(n_);
  for (const auto& h : hs_) {
    red.add_row(h.normal);
    if (red.full()) break;
  }
  return red.rank();
}

int Arrangement::rank_of(const std::vector<int>& subset) const {
  RowReducer red(n_);
  for (int i : subset) {
    red.add_row(hs_.at(i).normal);
    if (red.full()) break;
  }
  return red.rank();
}

int Arrangement::rank_of_mask(std::uint64_t mask) const {
  RowReducer red(n_);
  for (int i = 0; i < size(); ++i)
    if (mask >> i & 1) {
      red.add_row(hs_[i].normal);
      if (red.full()) break;
    }
  return red.rank();
}

bool Arrangement::is_loop(int i) const { return hs_.at(i).is_loop(); }

bool Arrangement::is_coloop(int i) const {
  if (is_loop(i)) return false;
  return deleted(i).rank() == rank() - 1;
}

Arrangement Arrangement::deleted(int i) const {
  if (i < 0 || i >= size()) throw std::out_of_range("hyperplane index");
  std::vector<Hyperplane> hs = hs_;
  hs.erase(hs.begin() + i);
  return Arrangement(n_, std::move(hs));
}

Arrangement Arrangement::restricted(int i) const {
  const Hyperplane& h = hs_.at(i);
  if (h.is_loop()) throw std::invalid_argument("cannot restrict to a loop");
  // parametrize the hyperplane by dropping the first coordinate with nonzero
  // normal entry; the remaining coordinates stay in their original order
  int p = 0;
  while (h.normal[p] == 0) ++p;
  std::vector<RatVec> basis;  // basis vectors of the subspace, one per kept coordinate
  for (int q = 0; q < n_; ++q) {
    if (q == p) continue;
    RatVec v(n_, Rat(0));
    v[q] = 1;
    v[p] = -h.normal[q] / h.normal[p];
    basis.push_back(std::move(v));
  }
  std::vector<Hyperplane> out;
  for (int j = 0; j < size(); ++j) {
    if (j == i) continue;
    RatVec w(basis.size());
    for (std::size_t q = 0; q < basis.size(); ++q) {
      Rat dot = 0;
      for (int l = 0; l < n_; ++l) dot += hs_[j].normal[l] * basis[q][l];
      w[q] = dot;
    }
    out.push_back(Hyperplane{std::move(w), hs_[j].label});
  }
  return Arrangement(n_ - 1, std::move(out));
}

Arrangement Arrangement::without_loops() const {
  std::vector<Hyperplane> hs;
  for (const auto& h : hs_)
    if (!h.is_loop()) hs.push_back(h);
  return Arrangement(n_, std::move(hs));
}

Arrangement Arrangement::doubled() const {
  std::vector<Hyperplane> hs;
  hs.reserve(2 * hs_.size());
  for (const auto& h : hs_) {
    hs.push_back(h);
    hs.push_back(h);
  }
  return Arrangement(n_, std::move(hs));
}

Arrangement Arrangement::permuted(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != size()) throw std::invalid_argument("permutation size");
  std::vector<Hyperplane> hs;
  hs.reserve(perm.size());
  for (int i : perm) hs.push_back(hs_.at(i));
  return Arrangement(n_, std::move(hs));
}

std::vector<Flat> Arrangement::flats_dim_ge1() const {
  const int m = size();
  if (m > 62) throw std::invalid_argument("too many hyperplanes for flat enumeration");
  // every flat is the closure of an independent subset, so subsets of size
  // up to min(rank, n) suffice
  const int r = rank();
  std::map<std::uint64_t, Flat> found;

  auto visit = [&](std::uint64_t mask) {
    RowReducer red(n_);
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) red.add_row(hs_[i].normal);
    auto basis = red.kernel();  // basis of the intersection subspace
    if (basis.empty()) return;  // dimension zero
    std::uint64_t closure = 0;
    std::vector<int> containing;
    for (int j = 0; j < m; ++j) {
      bool inside = true;
      for (const auto& v : basis) {
        Rat dot = 0;
        for (int l = 0; l < n_; ++l) dot += hs_[j].normal[l] * v[l];
        if (dot != 0) {
          inside = false;
          break;
        }
      }
      if (inside) {
        closure |= std::uint64_t(1) << j;
        containing.push_back(j);
      }
    }
    if (found.count(closure)) return;
    Flat f;
    f.containing = std::move(containing);
    f.rho = m - static_cast<int>(f.containing.size());
    for (auto& v : basis) {
      auto lifted = primitive_lift(v);
      RatVec w(lifted.size());
      for (std::size_t l = 0; l < lifted.size(); ++l) w[l] = Rat(lifted[l]);
      f.subspace_basis.push_back(std::move(w));
    }
    found.emplace(closure, std::move(f));
  };

  // enumerate subsets of size <= r by depth first search over indices
  std::vector<int> stack;
  auto rec = [&](auto&& self, int start, std::uint64_t mask, int depth) -> void {
    visit(mask);
    if (depth == r) return;
    for (int i = start; i < m; ++i) self(self, i + 1, mask | std::uint64_t(1) << i, depth + 1);
  };
  rec(rec, 0, 0, 0);

  std::vector<Flat> out;
  out.reserve(found.size());
  for (auto& [mask, f] : found) out.push_back(std::move(f));
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    if (a.containing.size() != b.containing.size()) return a.containing.size() < b.containing.size();
    return a.containing < b.containing;
  });
  return out;
}

std::string Arrangement::canonical_key() const {
  std::vector<std::string> cols;
  cols.reserve(hs_.size());
  for (const auto& h : hs_) {
    if (h.is_loop()) {
      cols.emplace_back("0");
      continue;
    }
    int p = 0;
    while (h.normal[p] == 0) ++p;
    std::string s;
    for (int l = 0; l < n_; ++l) {
      Rat scaled = h.normal[l] / h.normal[p];
      s += to_string(scaled);
      s += ',';
    }
    cols.push_back(std::move(s));
  }
  std::sort(cols.begin(), cols.end());
  std::string key = "n" + std::to_string(n_) + "|";
  for (const auto& c : cols) {
    key += c;
    key += ';';
  }
  return key;
}

Arrangement Arrangement::from_graph(int nvertices,
                                    const std::vector<std::pair<int, int>>& edges) {
  if (nvertices < 1) throw std::invalid_argument("graph needs at least one vertex");
  std::vector<Hyperplane> hs;
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (u < 1 || u > nvertices || v < 1 || v > nvertices)
      throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    RatVec normal(nvertices, Rat(0));
    normal[u - 1] = 1;
    normal[v - 1] = -1;
    hs.push_back(Hyperplane{std::move(normal), "x" + std::to_string(u) + "-x" + std::to_string(v)});
  }
  return Arrangement(nvertices, std::move(hs));
}

}  // namespace szt
