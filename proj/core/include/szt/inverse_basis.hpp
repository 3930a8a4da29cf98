#pragma once

#include <string>
#include <vector>

#include "szt/matroid.hpp"
#include "szt/perp.hpp"

namespace szt {

// One element of the inverse system family, described combinatorially. With
// alpha_i the defining form of hyperplane i and d the superspace
// differential, the element is
//   prod_{e external passive} alpha_e
//   * prod_{i in I} d(alpha_i)          I subset of the internally passive
//   * prod_{s in S} alpha_s             S subset of the internally active
//   * prod_{t in T} d(alpha_t)          T subset of the internally active
// with S and T disjoint and all fermionic factors multiplied in increasing
// hyperplane order. Its bidegree is (ep + |S|, |I| + |T|).
struct FamilyDescriptor {
  int basis_index = 0;
  std::vector<int> dalpha_passive;  // I
  std::vector<int> alpha_active;    // S
  std::vector<int> dalpha_active;   // T
  Bidegree bd;
};

struct InverseFamily {
  std::vector<BasisRecord> records;
  std::vector<FamilyDescriptor> descriptors;
  std::vector<SuperElement> elements;  // parallel to descriptors
};

InverseFamily build_family(const Arrangement& A);

// The expected bigraded census of the family, one term
// (1+q+t)^ia (1+t)^ip q^ep per basis.
BigradedSeries family_census(const std::vector<BasisRecord>& records);

struct FamilyCheck {
  bool membership = true;          // every element annihilated by the system
  bool independent = true;         // elements linearly independent per slice
  bool census_matches_kernel = true;
  bool census_matches_activity = true;
  std::string detail;              // first failure, for reporting
  bool ok() const {
    return membership && independent && census_matches_kernel && census_matches_activity;
  }
};

FamilyCheck verify_family(const InverseFamily& fam, const PerpSystem& sys);

// Indices of the classical sub-families: theta free elements (the t^0 layer)
// and the top fermionic layer of degree rank.
std::vector<int> external_subfamily(const InverseFamily& fam);
std::vector<int> central_subfamily(const InverseFamily& fam, int rank);

}  // namespace szt
