#pragma once

#include "realkirwan/rational.hpp"

#include <utility>
#include <vector>

namespace realkirwan {

/// Half-space { x : <normal, x> >= -offset }.
struct Facet {
  std::vector<long long> normal;
  Rational offset;

  bool operator==(const Facet&) const = default;
};

struct DelzantPolytope {
  std::size_t dim = 0;
  std::vector<Facet> facets;

  bool operator==(const DelzantPolytope&) const = default;
};

struct PolytopeFaces {
  /// Sorted lexicographically.
  std::vector<RVec> vertices;
  /// Facets tight at each vertex (exactly dim of them).
  std::vector<std::vector<std::size_t>> vertex_facets;
  /// Vertex pairs sharing dim - 1 facets, u < v, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Vertices by solving every dim x dim facet system, edges by shared facets.
/// Throws Error(NotDelzant) if the polytope is empty, unbounded, not simple,
/// not smooth, has a non-primitive normal, or a facet touching no vertex.
PolytopeFaces enumerate_faces(const DelzantPolytope& p);

/// Graded dimensions of F2[x_F] / (linear relations + face ideal), real
/// grading (deg x_F = 1), degrees 0..up_to.
std::vector<long> danilov_dims(const DelzantPolytope& p, unsigned up_to);
/// Degrees 0..dim.
std::vector<long> danilov_dims(const DelzantPolytope& p);

/// Same ring with deg x_F = 2, degrees 0..up_to; odd degrees are empty.
std::vector<long> danilov_dims_complex(const DelzantPolytope& p, unsigned up_to);

struct ToricCrossCheck {
  std::vector<long> danilov;         // real grading, degrees 0..dim
  std::vector<long> morse_counts;    // histogram of Morse indices on from_delzant
  std::vector<long> reversed;        // danilov reversed
  std::vector<long> gkm_dims;        // equivariant module dims, degrees 0..dim+2
  std::vector<long> gkm_complex_dims;
  std::vector<long> danilov_complex; // complex grading, degrees 0..2*dim
  std::size_t vertex_count = 0;
  bool perfection = false;
  bool degree_halving = false;
};

/// Compares the Danilov presentation, Morse counts on the moment graph and
/// Poincare duality, plus the two gradings of both rings. Throws
/// Error(OracleMismatch) naming the first offending degree.
ToricCrossCheck cross_check(const DelzantPolytope& p);

}  // namespace realkirwan
