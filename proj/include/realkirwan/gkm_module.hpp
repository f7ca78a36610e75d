#pragma once

#include "realkirwan/exec.hpp"
#include "realkirwan/f2/bitvec.hpp"
#include "realkirwan/f2/poly.hpp"
#include "realkirwan/moment_graph.hpp"

#include <string>
#include <vector>

namespace realkirwan {

/// A tuple of fixed-point restrictions, one homogeneous polynomial per vertex
/// (indexed like the graph's vertices).
struct EquivariantClass {
  unsigned degree = 0;
  std::vector<f2::F2Poly> values;

  bool operator==(const EquivariantClass&) const = default;
};

/// One degree of the module in dense coordinates: each class is a bit vector
/// of length num_vertices * basis.size(), block p holding the value at p.
struct ModuleSlice {
  unsigned degree = 0;
  std::size_t nvars = 0;
  std::size_t num_vertices = 0;
  f2::MonomialBasis basis;
  std::vector<f2::BitVec> classes;

  std::size_t dim() const { return classes.size(); }
  std::size_t width() const { return num_vertices * basis.size(); }

  EquivariantClass to_class(const f2::BitVec& v) const;
  f2::BitVec to_vector(const EquivariantClass& c) const;
  /// Class given by module coordinates (a combination of `classes`).
  f2::BitVec combine(const f2::BitVec& coords) const;
};

/// Degree-d slice { (f_p) : ell_e^{m_e} | f_u + f_v on every edge }. The
/// basis comes from the nullspace of the stacked remainder constraints and is
/// deterministic. Throws Error(TwoTorsion) for rejected graphs.
ModuleSlice module_slice(const MomentGraph& g, unsigned d, Exec exec = Exec::Parallel);

/// Same constraint system over an arbitrary homogeneous monomial list; used
/// for the complex grading where generators carry weight two.
ModuleSlice module_slice_over(const MomentGraph& g, unsigned label, const std::vector<f2::Monomial>& monomials,
                              unsigned poly_degree, Exec exec = Exec::Parallel);

std::vector<EquivariantClass> basis_in_degree(const MomentGraph& g, unsigned d);

/// dims[d] = dim of the degree-d slice for d = 0..up_to. The parallel path
/// solves the degrees concurrently.
std::vector<long> poincare_series(const MomentGraph& g, unsigned up_to, Exec exec = Exec::Parallel);

namespace reference {
std::vector<long> poincare_series_serial(const MomentGraph& g, unsigned up_to);
}

/// Throws Error(UnknownVertex).
const f2::F2Poly& restrict_to(const MomentGraph& g, const EquivariantClass& c, const std::string& vertex_id);

/// Pointwise product of two classes.
EquivariantClass product(const EquivariantClass& a, const EquivariantClass& b);

/// Whether c satisfies every edge condition of g.
bool satisfies_edge_conditions(const MomentGraph& g, const EquivariantClass& c);

struct DualGradingReport {
  std::vector<long> real_dims;     // real degree k = 0..up_to
  std::vector<long> complex_dims;  // complex degree c = 0..2*up_to
  bool consistent = false;         // complex 2k == real k, odd complex degrees zero
};

/// Both gradings of the same combinatorial ring, the complex side solved
/// independently over weight-two generators. Throws
/// Error(DegreeHalvingUnavailable) unless the graph is mod-2 GKM.
DualGradingReport dual_grading_report(const MomentGraph& g, unsigned up_to);

}  // namespace realkirwan
