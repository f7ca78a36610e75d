#pragma once

#include "realkirwan/exec.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/moment_graph.hpp"
#include "realkirwan/morse.hpp"

#include <optional>
#include <string>
#include <vector>

namespace realkirwan {

struct RegularityCheck {
  bool regular = true;
  std::string witness;
};

/// Necessary-only regularity test on the 1-skeleton: mu must avoid every
/// vertex image and, when the torus rank is at least 2, every closed edge
/// segment.
RegularityCheck check_regular(const MomentGraph& g, const RVec& mu);

/// A chamber of the arrangement { <phi(p) - mu, .> = 0 } with the strict
/// sign of <phi(p) - mu, xi> at every vertex.
struct Chamber {
  Direction xi;
  std::vector<int> signs;

  bool operator==(const Chamber&) const = default;
};

/// One representative per chamber, sorted by sign vector. Throws
/// Error(UnsupportedDimension) for n_phi > 3 and Error(IrregularValue) if
/// mu is a vertex image.
std::vector<Chamber> chambers(const MomentGraph& g, const RVec& mu);

struct KernelSlice {
  unsigned degree = 0;
  ModuleSlice module;
  /// Kernel basis in module coordinates (combinations of module.classes).
  std::vector<f2::BitVec> coords;
  /// Same basis as full fixed-point vectors.
  std::vector<f2::BitVec> vectors;
  /// dim K_xi for each chamber, same order as the chamber list.
  std::vector<long> chamber_dims;

  std::size_t dim() const { return coords.size(); }
  bool contains(const EquivariantClass& c) const;
};

/// Classes of the slice vanishing at every vertex with a negative sign.
std::vector<f2::BitVec> chamber_kernel(const ModuleSlice& slice, const Chamber& chamber);

/// Span over all chambers of the K_xi in degree d.
KernelSlice kernel_in_degree(const MomentGraph& g, const RVec& mu, unsigned d, Exec exec = Exec::Parallel);
KernelSlice kernel_in_degree(const MomentGraph& g, const std::vector<Chamber>& chambers, unsigned d,
                             Exec exec = Exec::Parallel);

namespace reference {
KernelSlice kernel_in_degree_serial(const MomentGraph& g, const std::vector<Chamber>& chambers, unsigned d);
}

struct ReduceOptions {
  std::optional<unsigned> up_to;
  bool assert_free = false;
  Exec exec = Exec::Parallel;
};

struct ReductionReport {
  RVec mu;
  unsigned up_to = 0;
  int top_degree = 0;  // q_dim - n
  std::vector<Chamber> chambers;
  std::vector<long> module_dims;
  std::vector<long> kernel_dims;
  std::vector<long> quotient_dims;
  /// Quotient dims through top_degree, i.e. the Betti numbers of the reduction.
  std::vector<long> betti;
  bool vanishing_ok = false;
  bool duality_checked = false;
  bool duality_ok = false;
  bool closed = false;
  bool assert_free = false;
  ValidationStatus validation = ValidationStatus::Rejected;
  std::string regularity = "1-skeleton (necessary condition only)";
  std::vector<std::string> notes;
};

/// Module, kernel and quotient dimensions for degrees 0..up_to (default
/// q_dim - n + 3). Vanishing above q_dim - n and Poincare duality (when the
/// graph is closed and assert_free is set) are checked; a failure raises
/// Error(ModelInconsistency). Irregular mu raises Error(IrregularValue).
ReductionReport reduce(const MomentGraph& g, const RVec& mu, const ReduceOptions& options = {});

}  // namespace realkirwan
