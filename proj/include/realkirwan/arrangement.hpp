#pragma once

#include "realkirwan/rational.hpp"

#include <vector>

namespace realkirwan {

/// One interior point per chamber of the central arrangement
/// { x : <normal, x> = 0 } in R^dim. Normals must be nonzero; proportional
/// normals describe the same hyperplane. Representatives are primitive
/// integer vectors, sorted by their sign vector against `normals`.
///
/// Every chamber of an essential arrangement in dimension >= 2 is a pointed
/// cone, hence has an extreme ray lying on a one-dimensional flat. The
/// enumeration walks those flats, solves the localized arrangement one
/// dimension down, and pushes each local chamber off the ray by an exact
/// step small enough to keep every other sign. Non-essential arrangements
/// are first restricted to the span of their normals.
std::vector<RVec> central_chambers(const std::vector<RVec>& normals, std::size_t dim);

/// Sign (+1 / -1 / 0) of <normal, x> for each normal.
std::vector<int> sign_vector(const std::vector<RVec>& normals, const RVec& x);

}  // namespace realkirwan
