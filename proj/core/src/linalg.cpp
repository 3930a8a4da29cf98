#include "szt/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace szt {

namespace {

// divide by the content and make the first nonzero entry positive
void make_primitive(IntVec& v) {
  Int g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g == 0) return;
  for (const auto& x : v)
    if (x != 0) {
      if (sgn(x) < 0) g = -g;
      break;
    }
  for (auto& x : v) x /= g;
}

}  // namespace

bool RowReducer::add_row(const RatVec& row) {
  if (static_cast<int>(row.size()) != ncols_) throw std::invalid_argument("row length mismatch");
  return add_row(primitive_lift(row));
}

bool RowReducer::add_row(IntVec row) {
  if (static_cast<int>(row.size()) != ncols_) throw std::invalid_argument("row length mismatch");
  // eliminate the stored pivot columns; rows_ are mutually reduced there, so
  // the order of elimination does not matter
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Int& piv = rows_[k][pivots_[k]];
    const Int& val = row[pivots_[k]];
    if (val == 0) continue;
    IntVec next(ncols_);
    for (int c = 0; c < ncols_; ++c) next[c] = piv * row[c] - val * rows_[k][c];
    row = std::move(next);
    make_primitive(row);
  }
  int pivot = -1;
  for (int c = 0; c < ncols_; ++c) {
    if (row[c] == 0) continue;
    if (pivot == -1 || mpz_cmpabs(row[c].get_mpz_t(), row[pivot].get_mpz_t()) > 0) pivot = c;
  }
  if (pivot == -1) return false;
  if (sgn(row[pivot]) < 0)
    for (auto& x : row) x = -x;
  // back eliminate the new pivot column from the stored rows
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Int& val = rows_[k][pivot];
    if (val == 0) continue;
    IntVec next(ncols_);
    for (int c = 0; c < ncols_; ++c) next[c] = row[pivot] * rows_[k][c] - val * row[c];
    rows_[k] = std::move(next);
    make_primitive(rows_[k]);
    if (sgn(rows_[k][pivots_[k]]) < 0)
      for (auto& x : rows_[k]) x = -x;
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::vector<int> RowReducer::pivot_cols() const {
  std::vector<int> p = pivots_;
  std::sort(p.begin(), p.end());
  return p;
}

std::vector<RatVec> RowReducer::rref() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<RatVec> out;
  out.reserve(rows_.size());
  for (std::size_t k : order) {
    RatVec r(ncols_);
    const Int& piv = rows_[k][pivots_[k]];
    for (int c = 0; c < ncols_; ++c) {
      r[c] = Rat(rows_[k][c], piv);
      r[c].canonicalize();
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<RatVec> RowReducer::kernel() const {
  std::vector<bool> is_pivot(ncols_, false);
  for (int p : pivots_) is_pivot[p] = true;
  auto rr = rref();
  auto pc = pivot_cols();
  std::vector<RatVec> out;
  for (int f = 0; f < ncols_; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(ncols_, Rat(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pc.size(); ++k) v[pc[k]] = -rr[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

int rank_of(const std::vector<RatVec>& rows, int ncols) {
  RowReducer red(ncols);
  for (const auto& r : rows) {
    red.add_row(r);
    if (red.full()) break;
  }
  return red.rank();
}

std::vector<RatVec> kernel_of(const std::vector<RatVec>& rows, int ncols) {
  RowReducer red(ncols);
  for (const auto& r : rows) red.add_row(r);
  return red.kernel();
}

std::optional<RatVec> solve_columns(const std::vector<RatVec>& cols, const RatVec& rhs) {
  const int r = static_cast<int>(cols.size());
  const std::size_t n = rhs.size();
  for (const auto& c : cols)
    if (c.size() != n) throw std::invalid_argument("column length mismatch");
  // a combination summing to rhs is a kernel vector of [cols | rhs] with a
  // nonzero last coordinate; the kernel is pivot-choice independent
  RowReducer red(r + 1);
  for (std::size_t i = 0; i < n; ++i) {
    RatVec row(r + 1);
    for (int j = 0; j < r; ++j) row[j] = cols[j][i];
    row[r] = rhs[i];
    red.add_row(row);
  }
  for (const auto& v : red.kernel()) {
    if (v[r] == 0) continue;
    RatVec sol(r);
    for (int j = 0; j < r; ++j) sol[j] = -v[j] / v[r];
    return sol;
  }
  return std::nullopt;
}

}  // namespace szt
