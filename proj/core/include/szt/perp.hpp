#pragma once

#include <map>
#include <vector>

#include "szt/arrangement.hpp"
#include "szt/bipoly.hpp"
#include "szt/superspace.hpp"

namespace szt {

// One generator of the annihilator system in expanded monomial form. Every
// flat X of dimension d >= 1 with exponent p = rho(X) + k > 0 contributes,
// for each multi-index over a basis b_1..b_d of its subspace:
//   purely bosonic  prod_j (b_j . x)^(gamma_j)            with |gamma| = p,
//   mixed           sum_j delta_j (b . x)^(delta - e_j) (b_j . theta)
//                                                         with |delta| = p.
// Together these span the same spaces as the powers lambda^p and their
// differentials over all lines lambda in the flat.
struct ConstraintOperator {
  SuperElement op;
  int flat = -1;
  int exponent = 0;
  Bidegree bd;
};

// x monomials of total degree deg, exponent vectors in descending
// lexicographic order; theta words of length len in ascending order.
std::vector<XExp> x_monomials(int n, int deg);
std::vector<ThetaWord> theta_words(int n, int len);

// The Macaulay inverse system of the superspace power ideal attached to an
// arrangement and an offset k >= -1 (k = 1 external, 0 central, -1
// internal). Computes slice dimensions, slice kernel bases, the bigraded
// Hilbert series, and membership.
class PerpSystem {
 public:
  PerpSystem(Arrangement A, int k);

  const Arrangement& arrangement() const { return A_; }
  int offset() const { return k_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const std::vector<ConstraintOperator>& operators() const { return ops_; }

  // bosonic degrees above this bound have empty slices
  int max_bos() const;

  int slice_dim(Bidegree bd) const;
  // canonical spanning set of one slice, rows of the reduced echelon form
  // over the slice's monomial basis
  std::vector<SuperElement> kernel_basis(Bidegree bd) const;
  BigradedSeries hilbert() const;
  bool contains(const SuperElement& f) const;

 private:
  struct BosKernel {
    std::vector<XExp> mons;       // slice monomials of this degree
    std::map<XExp, int> index;
    std::vector<RatVec> basis;    // kernel of all bosonic operators
  };
  const BosKernel& bos_kernel(int deg) const;
  // matrix of compressed mixed constraint rows at (deg, len), columns
  // indexed by (kernel vector, theta word) pairs
  void feed_mixed_rows(int deg, int len, RowReducer& red) const;

  Arrangement A_;
  int k_;
  std::vector<Flat> flats_;
  std::vector<ConstraintOperator> ops_;
  mutable std::map<int, BosKernel> bos_cache_;
};

}  // namespace szt
