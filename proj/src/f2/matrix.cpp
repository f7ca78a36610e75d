#include "realkirwan/f2/matrix.hpp"

#include <omp.h>

#include <utility>

namespace realkirwan::f2 {

namespace {

// Below this many row-words per elimination step the fork costs more than it saves.
constexpr std::size_t kParallelWork = 1u << 14;

}  // namespace

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

void F2Matrix::add_row(BitVec row) {
  if (rows_.empty() && ncols_ == 0) ncols_ = row.size();
  rows_.push_back(std::move(row));
}

RrefResult rref(F2Matrix m, Exec exec) {
  if (exec == Exec::Serial) return reference::rref_serial(std::move(m));

  RrefResult out;
  const std::size_t nrows = m.nrows();
  const std::size_t ncols = m.ncols();
  const bool wide = nrows * ((ncols + 63) / 64) >= kParallelWork;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < ncols && lead < nrows; ++col) {
    std::size_t p = lead;
    while (p < nrows && !m.at(p, col)) ++p;
    if (p == nrows) continue;
    std::swap(m.row(lead), m.row(p));
    const BitVec pivot_row = m.row(lead);
    const auto n = static_cast<std::ptrdiff_t>(nrows);
#pragma omp parallel for schedule(static) if (wide)
    for (std::ptrdiff_t r = 0; r < n; ++r) {
      if (static_cast<std::size_t>(r) != lead && m.at(static_cast<std::size_t>(r), col)) {
        m.row(static_cast<std::size_t>(r)) ^= pivot_row;
      }
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

namespace reference {

RrefResult rref_serial(F2Matrix m) {
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.ncols() && lead < m.nrows(); ++col) {
    std::size_t p = lead;
    while (p < m.nrows() && !m.at(p, col)) ++p;
    if (p == m.nrows()) continue;
    std::swap(m.row(lead), m.row(p));
    for (std::size_t r = 0; r < m.nrows(); ++r) {
      if (r != lead && m.at(r, col)) m.row(r) ^= m.row(lead);
    }
    out.pivots.push_back(col);
    ++lead;
  }
  out.rank = lead;
  out.reduced = std::move(m);
  return out;
}

}  // namespace reference

std::vector<BitVec> nullspace(const F2Matrix& m, Exec exec) {
  const auto rr = rref(m, exec);
  const std::size_t ncols = m.ncols();
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : rr.pivots) is_pivot[p] = true;
  std::vector<BitVec> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    BitVec v(ncols);
    v.set(f);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      if (rr.reduced.at(i, f)) v.set(rr.pivots[i]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const F2Matrix& m, Exec exec) { return rref(m, exec).rank; }

BitVec RowSpace::reduce(BitVec v) const {
  // A leader row has no bits below its leading bit, so clearing bit `pos`
  // never disturbs the bits already scanned.
  for (std::size_t pos = v.find_first(); pos != BitVec::npos; pos = v.find_next(pos + 1)) {
    const auto it = leaders_.find(pos);
    if (it != leaders_.end()) v ^= it->second;
  }
  return v;
}

bool RowSpace::insert(const BitVec& v) {
  BitVec r = reduce(v);
  const std::size_t lead = r.find_first();
  if (lead == BitVec::npos) return false;
  leaders_.emplace(lead, std::move(r));
  originals_.push_back(v);
  return true;
}

bool RowSpace::contains(const BitVec& v) const { return reduce(v).none(); }

}  // namespace realkirwan::f2
