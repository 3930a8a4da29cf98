#pragma once

#include <string>
#include <vector>

#include "szt/arrangement.hpp"
#include "szt/bipoly.hpp"
#include "szt/rational.hpp"
#include "szt/superspace.hpp"

namespace szt::testing {

// arrangement in Q^n from integer normal vectors
inline Arrangement arr(int n, const std::vector<std::vector<int>>& normals) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < normals.size(); ++i) {
    RatVec v;
    for (int c : normals[i]) v.emplace_back(c);
    hs.push_back({v, "H" + std::to_string(i + 1)});
  }
  return Arrangement(n, hs);
}

// x1, x2, x1 - x2: the rank-2 arrangement used throughout the examples
inline Arrangement triangle() { return arr(2, {{1, 0}, {0, 1}, {1, -1}}); }

// x1, x1 - x2: two independent hyperplanes in the plane
inline Arrangement two_generic() { return arr(2, {{1, 0}, {1, -1}}); }

inline BiPoly bp(const std::vector<std::vector<int>>& terms) {
  BiPoly p;
  for (const auto& t : terms) p.add_term(t[0], t[1], Int(t[2]));
  return p;
}

// random superspace element with nterms draws, exponents below 3
inline SuperElement random_element(Rng& rng, int n, int nterms) {
  SuperElement f(n);
  for (int t = 0; t < nterms; ++t) {
    XExp x(n, 0);
    for (auto& e : x) e = rng.uniform(0, 2);
    ThetaWord w;
    for (int i = 0; i < n; ++i)
      if (rng.uniform(0, 1)) w.push_back(i);
    f.add_term({x, w}, Rat(rng.uniform(-3, 3)));
  }
  return f;
}

// m columns in Q^n with entries in [-2, 2], zero columns redrawn
inline Arrangement random_arrangement(Rng& rng, int n, int m) {
  std::vector<Hyperplane> hs;
  for (int i = 0; i < m; ++i) {
    RatVec v(n);
    bool zero = true;
    while (zero) {
      for (auto& x : v) {
        x = Rat(rng.uniform(-2, 2));
        if (x != 0) zero = false;
      }
    }
    hs.push_back({v, "H" + std::to_string(i + 1)});
  }
  return Arrangement(n, hs);
}

// stratified sample: every (dimension, size) cell gets the same number of draws
inline std::vector<Arrangement> corpus(std::uint64_t seed, int per_cell) {
  Rng rng(seed);
  std::vector<Arrangement> out;
  for (int n = 2; n <= 4; ++n)
    for (int m = 1; m <= 6; ++m)
      for (int i = 0; i < per_cell; ++i) out.push_back(random_arrangement(rng, n, m));
  return out;
}

}  // namespace szt::testing
