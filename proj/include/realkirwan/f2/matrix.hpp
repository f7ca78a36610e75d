#pragma once

#include "realkirwan/exec.hpp"
#include "realkirwan/f2/bitvec.hpp"

#include <map>
#include <vector>

namespace realkirwan::f2 {

/// Row-major matrix over F2; every row has width ncols().
class F2Matrix {
 public:
  F2Matrix() = default;
  explicit F2Matrix(std::size_t ncols) : ncols_(ncols) {}
  F2Matrix(std::size_t nrows, std::size_t ncols) : ncols_(ncols), rows_(nrows, BitVec(ncols)) {}

  static F2Matrix identity(std::size_t n);

  std::size_t nrows() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }

  void add_row(BitVec row);
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }

  bool at(std::size_t r, std::size_t c) const { return rows_[r].test(c); }
  void set(std::size_t r, std::size_t c, bool v = true) { rows_[r].set(c, v); }

  bool operator==(const F2Matrix&) const = default;

 private:
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  std::size_t rank = 0;
  /// Same shape as the input; nonzero rows first, zero rows at the bottom.
  F2Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form. The parallel path distributes the row
/// eliminations of each pivot step over OpenMP threads once the matrix is
/// large enough to amortize the fork.
RrefResult rref(F2Matrix m, Exec exec = Exec::Parallel);

/// Basis of { x : M x = 0 }, one vector per free column in increasing order.
std::vector<BitVec> nullspace(const F2Matrix& m, Exec exec = Exec::Parallel);

std::size_t rank(const F2Matrix& m, Exec exec = Exec::Parallel);

namespace reference {

/// Plain single-threaded Gauss-Jordan; kept as the oracle for rref().
RrefResult rref_serial(F2Matrix m);

}  // namespace reference

/// Incrementally built subspace with membership tests. Basis vectors keep
/// distinct leading bits.
class RowSpace {
 public:
  explicit RowSpace(std::size_t width) : width_(width) {}

  /// Adds v; returns true if it enlarged the span.
  bool insert(const BitVec& v);
  bool contains(const BitVec& v) const;
  std::size_t dim() const { return leaders_.size(); }
  std::size_t width() const { return width_; }

  /// Basis in insertion order of the independent vectors as given.
  const std::vector<BitVec>& original_basis() const { return originals_; }

 private:
  BitVec reduce(BitVec v) const;

  std::size_t width_;
  std::map<std::size_t, BitVec> leaders_;
  std::vector<BitVec> originals_;
};

}  // namespace realkirwan::f2
