#pragma once

#include <optional>
#include <vector>

#include "szt/rational.hpp"

namespace szt {

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;

// Incremental exact row reduction. Rows are stored as primitive integer
// vectors, mutually reduced at the pivot columns, so all elimination
// arithmetic is fraction free; rationals only appear when reading out the
// reduced row echelon form or a kernel basis. Pivots are chosen by largest
// magnitude in the integer lift of the incoming row.
class RowReducer {
 public:
  explicit RowReducer(int ncols) : ncols_(ncols) {}

  // Reduces the row against the current span; keeps it when independent.
  // Returns true when the row increased the rank.
  bool add_row(const RatVec& row);
  bool add_row(IntVec row);

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }
  bool full() const { return rank() == ncols_; }

  // Pivot columns in increasing order.
  std::vector<int> pivot_cols() const;

  // Unique reduced row echelon form of the row space, pivot entries 1.
  std::vector<RatVec> rref() const;

  // Canonical basis of the null space of the row span seen as constraints:
  // one vector per free column f, normalized to have entry 1 at f.
  std::vector<RatVec> kernel() const;

 private:
  int ncols_;
  std::vector<IntVec> rows_;   // primitive, pivot entry positive
  std::vector<int> pivots_;    // pivot column of each stored row
};

int rank_of(const std::vector<RatVec>& rows, int ncols);
std::vector<RatVec> kernel_of(const std::vector<RatVec>& rows, int ncols);

// Solves sum_j c_j * cols[j] = rhs. Requires the columns to be linearly
// independent; returns nullopt when the system is inconsistent.
std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& rhs);

}  // namespace szt
