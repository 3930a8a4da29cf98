#pragma once

#include <vector>

#include "szt/arrangement.hpp"
#include "szt/bipoly.hpp"

namespace szt {

// Activity data of one basis of the column matroid, all sets sorted. The
// comparisons use positions in the arrangement's hyperplane list; earlier
// means smaller.
struct BasisRecord {
  std::vector<int> basis;
  std::vector<int> ext_active;
  std::vector<int> ext_passive;
  std::vector<int> int_active;
  std::vector<int> int_passive;
};

// All bases (maximal independent subsets) in lexicographic order.
std::vector<std::vector<int>> enumerate_bases(const Arrangement& A);

// External activity: H outside B is active when it is the smallest element
// of the unique circuit of B + H. Internal activity: H in B is active when
// no smaller H' keeps (B - H) + H' a basis.
BasisRecord classify_activities(const Arrangement& A, const std::vector<int>& basis);
std::vector<BasisRecord> all_activities(const Arrangement& A);

enum class TutteMethod { SubsetSum, DeletionContraction, Activity };

TuttePoly tutte(const Arrangement& A, TutteMethod method = TutteMethod::DeletionContraction);

// Coefficients of the characteristic polynomial by ascending power,
// computed as a signed Tutte evaluation along y = 0.
std::vector<Int> characteristic_poly(const Arrangement& A);

// Tutte polynomial of the arrangement with every hyperplane repeated d
// times, from the Tutte polynomial of the original and its rank. Only the
// doubled case d = 2 is supported.
TuttePoly thicken_tutte(const TuttePoly& T, int rank, int d);

}  // namespace szt
