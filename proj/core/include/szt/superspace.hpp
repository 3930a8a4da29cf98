#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "szt/rational.hpp"

namespace szt {

// Elements of the superspace ring in n commuting variables x_1..x_n and n
// anticommuting variables theta_1..theta_n. A term is a monomial in the x
// variables times a theta word; words are kept strictly increasing and the
// reordering sign is folded into the coefficient, so the representation of
// an element is canonical.

using XExp = std::vector<int>;        // exponent vector of length n
using ThetaWord = std::vector<int>;   // strictly increasing 0-based indices

struct Bidegree {
  int bos = 0;
  int ferm = 0;
  auto operator<=>(const Bidegree&) const = default;
};

// Sorts the concatenation a,b into one increasing word. Returns the word and
// the sign of the permutation, or nullopt when an index repeats (the product
// is zero).
std::optional<std::pair<ThetaWord, int>> theta_concat(const ThetaWord& a, const ThetaWord& b);

struct TermKey {
  XExp x;
  ThetaWord th;
  auto operator<=>(const TermKey&) const = default;
};

class SuperElement {
 public:
  explicit SuperElement(int n = 0) : n_(n) {}

  static SuperElement zero(int n) { return SuperElement(n); }
  static SuperElement constant(int n, const Rat& c);
  static SuperElement variable(int n, int i);  // x_i, 0-based
  static SuperElement theta(int n, int i);     // theta_i, 0-based
  static SuperElement linear_form(const std::vector<Rat>& coeffs);   // sum c_i x_i
  static SuperElement linear_theta(const std::vector<Rat>& coeffs);  // sum c_i theta_i

  int nvars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::map<TermKey, Rat>& terms() const { return terms_; }

  Rat coeff(const TermKey& k) const;
  void add_term(const TermKey& k, const Rat& c);  // accumulates, drops zeros

  SuperElement& operator+=(const SuperElement& o);
  SuperElement& operator-=(const SuperElement& o);
  SuperElement operator+(const SuperElement& o) const;
  SuperElement operator-(const SuperElement& o) const;
  SuperElement operator*(const SuperElement& o) const;
  SuperElement operator*(const Rat& c) const;
  bool operator==(const SuperElement& o) const;

  bool is_bihomogeneous() const;
  // bidegree of a nonzero bihomogeneous element, nullopt otherwise
  std::optional<Bidegree> bidegree() const;
  std::map<Bidegree, SuperElement> components() const;

  // The superspace differential: f maps to sum_i (df/dx_i) theta_i, with the
  // theta factor multiplied on the right as written. Squares to zero.
  SuperElement euler_d() const;

  // Interprets this element as a differential operator, substituting d/dx_i
  // for x_i and the contraction against theta_i for theta_i, and applies it
  // to g. Contractions compose in the written order, rightmost acting first.
  SuperElement apply_to(const SuperElement& g) const;

  SuperElement pow(int e) const;

  std::string str() const;  // human readable, 1-based variable names

 private:
  int n_;
  std::map<TermKey, Rat> terms_;
};

SuperElement operator*(const Rat& c, const SuperElement& f);

}  // namespace szt
