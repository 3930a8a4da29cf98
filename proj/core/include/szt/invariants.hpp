#pragma once

#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "szt/matroid.hpp"
#include "szt/perp.hpp"

namespace szt {

// Bigraded Hilbert series of the external (k = 1) quotient from the subset
// expansion  sum_{A subset E} q^(m-|A|) (1-q)^(|A|-rk A) (1+t)^(rk A),
// which is free of denominators. Falls back to the Tutte substitution for
// large arrangements.
BigradedSeries hilbert_via_tutte(const Arrangement& A);

// The same series by substituting into a Tutte polynomial:
// (1+t)^r q^(m-r) T((1+q+t)/(1+t), 1/q), expanded per Tutte monomial so no
// division is ever needed.
BigradedSeries hilbert_from_tutte_poly(const TuttePoly& T, int m, int r);

// Deletion / restriction recursion on the last hyperplane: loops drop out,
// a coloop contributes (1+q+t) times the restriction, and otherwise
// q * deleted + (1+t) * restricted. Memoized on the canonical column key.
class RecursionEngine {
 public:
  BigradedSeries hilbert(const Arrangement& A);

 private:
  std::unordered_map<std::string, BigradedSeries> memo_;
  std::mutex mu_;
};
BigradedSeries hilbert_via_recursion(const Arrangement& A);

// Entries f_0..f_n: face counts of a generic deformation, f_d the number of
// faces of dimension d, read off the t expansion of the series at q = 1.
std::vector<Int> generic_fvector(const Arrangement& A);

// Classical (theta free) external series q^(m-r) T(1+q, 1/q) as a
// polynomial in q only.
BigradedSeries classical_external_series(const Arrangement& A);

struct TopCheck {
  BigradedSeries top;        // top total degree part of the series
  BigradedSeries predicted;  // from the characteristic polynomial
  bool match = false;
};
TopCheck top_summand_check(const Arrangement& A, const BigradedSeries& hilb);

struct DoubledRegions {
  Int dimension;               // Hilb(1, 1)
  Int doubled_independent;     // independent set count of the doubled arrangement
  bool count_match = false;
  BigradedSeries substituted;  // Hilb(q^2, q), univariate in q
  BigradedSeries doubled_external;  // q^(2m-r) T_2A(1+q, 1/q)
  bool series_match = false;
};
DoubledRegions doubled_region_check(const Arrangement& A, const BigradedSeries& hilb);

// The internal (k = 0) analogue compared against
// (1+t)^r q^(m-r) T(1/(1+t), 1/q); reported, never asserted.
struct ConjectureReport {
  BigradedSeries lhs;  // kernel dimensions at k = 0
  BigradedSeries rhs;  // Tutte substitution
  bool equal = false;
};
ConjectureReport internal_variant_check(const Arrangement& A);

struct LogConcavityReport {
  bool ok = true;
  std::vector<std::string> violations;
};
// Checks rows (fixed t), columns (fixed q) and total degree diagonals for
// support without internal zeros and the log concavity inequality.
LogConcavityReport log_concavity(const BigradedSeries& S);

struct GraphRegionReport {
  Int series_value;  // Hilb(1, 1)
  Int tutte_value;   // 2^r T(3/2, 1)
  bool connected = false;
  bool equal = false;
};
GraphRegionReport graph_region_identity(int nvertices,
                                        const std::vector<std::pair<int, int>>& edges);

}  // namespace szt
