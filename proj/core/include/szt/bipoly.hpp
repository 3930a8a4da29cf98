#pragma once

#include <map>
#include <utility>

#include "szt/rational.hpp"

namespace szt {

// Bivariate polynomial with integer coefficients, sparse over exponent
// pairs. Serves both for Tutte polynomials (variables x, y) and bigraded
// Hilbert series (variables q, t). Zero coefficients are never stored.
class BiPoly {
 public:
  using Key = std::pair<int, int>;

  BiPoly() = default;
  static BiPoly constant(const Int& v);
  static BiPoly monomial(int a, int b, const Int& v = 1);

  const std::map<Key, Int>& terms() const { return c_; }
  Int coeff(int a, int b) const;
  bool is_zero() const { return c_.empty(); }
  void add_term(int a, int b, const Int& v);

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  BiPoly operator*(const Int& v) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  int deg1() const;  // max exponent of the first variable, -1 for zero
  int deg2() const;
  int total_degree() const;  // max a+b, -1 for zero

  Int eval(const Int& a, const Int& b) const;
  Rat eval(const Rat& a, const Rat& b) const;

 private:
  std::map<Key, Int> c_;
};

BiPoly pow(const BiPoly& p, int e);

// Shared aliases; a Tutte polynomial lives in (x, y), a bigraded Hilbert
// series in (q, t) with nonnegative coefficients.
using TuttePoly = BiPoly;
using BigradedSeries = BiPoly;

}  // namespace szt
