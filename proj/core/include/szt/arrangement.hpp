#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "szt/linalg.hpp"

namespace szt {

// A hyperplane through the origin, stored by its normal vector. A zero
// normal is legal and acts as a loop; such columns only arise internally
// from restrictions, user input rejects them.
struct Hyperplane {
  RatVec normal;
  std::string label;
  bool is_loop() const;
};

// An intersection flat of positive dimension: the set of hyperplanes
// containing the subspace (a closed set), a primitive integer basis of the
// subspace, and the count rho of hyperplanes not containing it.
struct Flat {
  std::vector<int> containing;
  std::vector<RatVec> subspace_basis;
  int rho = 0;
  int dim() const { return static_cast<int>(subspace_basis.size()); }
};

// An ordered multiarrangement in Q^n. The order of the list is meaningful:
// activity classifications and the deletion restriction recursion both pivot
// on positions in this list. Repeated (parallel) normals are how multiplicity
// is represented.
class Arrangement {
 public:
  Arrangement(int n, std::vector<Hyperplane> hs);

  int dim() const { return n_; }
  int size() const { return static_cast<int>(hs_.size()); }
  const Hyperplane& hyperplane(int i) const { return hs_.at(i); }
  const std::vector<Hyperplane>& hyperplanes() const { return hs_; }

  int rank() const;
  int rank_of(const std::vector<int>& subset) const;
  int rank_of_mask(std::uint64_t mask) const;
  bool is_loop(int i) const;
  bool is_coloop(int i) const;

  Arrangement deleted(int i) const;
  // Restriction to hyperplane i (not a loop): ambient dimension drops by
  // one, every other hyperplane is cut down to the subspace, parallel copies
  // of i become loops and are kept.
  Arrangement restricted(int i) const;
  Arrangement without_loops() const;
  Arrangement doubled() const;  // each hyperplane immediately followed by a copy
  Arrangement permuted(const std::vector<int>& perm) const;

  // All intersection flats of dimension >= 1, including the ambient flat.
  std::vector<Flat> flats_dim_ge1() const;

  // Scale invariant key of the column multiset, for memoization.
  std::string canonical_key() const;

  static Arrangement from_graph(int nvertices, const std::vector<std::pair<int, int>>& edges);

 private:
  int n_;
  std::vector<Hyperplane> hs_;
};

}  // namespace szt
