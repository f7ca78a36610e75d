#pragma once

#include "realkirwan/moment_graph.hpp"
#include "realkirwan/rational.hpp"

#include <optional>
#include <vector>

namespace realkirwan {

using Direction = RVec;

/// Morse index per vertex, aligned with the graph's vertices.
struct IndexTable {
  std::vector<unsigned> lambda;

  /// Sorted copy of the index values.
  std::vector<unsigned> multiset() const;
};

/// xi = (1, N, N^2, ...) where N exceeds every entry of every edge
/// difference scaled to a primitive integer vector; the leading nonzero
/// term then dominates, so no edge pairs to zero.
Direction generic_direction(const MomentGraph& g);

/// Whether <phi(v) - phi(u), xi> != 0 on every edge.
bool is_generic(const MomentGraph& g, const Direction& xi);

/// lambda(p) = sum of multiplicities of edges leaving p downward in xi.
/// Throws Error(NonGenericDirection) naming the first edge with zero pairing.
IndexTable morse_indices(const MomentGraph& g, const Direction& xi);

/// Coefficients of (sum_p t^lambda(p)) / (1 - t)^n for degrees 0..up_to.
std::vector<long> morse_series(const IndexTable& table, std::size_t n, unsigned up_to);

struct PerfectionResult {
  bool ok = false;
  Direction xi;
  IndexTable indices;
  std::vector<long> module_dims;
  std::vector<long> morse_dims;
};

/// Compares the equivariant module's Poincare series against the Morse
/// series through up_to. Uses generic_direction when xi is not given.
PerfectionResult perfection_check(const MomentGraph& g, unsigned up_to, std::optional<Direction> xi = std::nullopt);

}  // namespace realkirwan
