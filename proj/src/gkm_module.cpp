#include "realkirwan/gkm_module.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/f2/matrix.hpp"

#include <map>

namespace realkirwan {

EquivariantClass ModuleSlice::to_class(const f2::BitVec& v) const {
  EquivariantClass c;
  c.degree = degree;
  const std::size_t m = basis.size();
  const unsigned pdeg = m ? basis[0].degree() : degree;
  for (std::size_t p = 0; p < num_vertices; ++p) {
    c.values.push_back(f2::F2Poly::from_dense(v.slice(p * m, m), basis, nvars, pdeg));
  }
  return c;
}

f2::BitVec ModuleSlice::to_vector(const EquivariantClass& c) const {
  const std::size_t m = basis.size();
  f2::BitVec v(width());
  for (std::size_t p = 0; p < num_vertices; ++p) v.xor_at(p * m, c.values[p].to_dense(basis));
  return v;
}

f2::BitVec ModuleSlice::combine(const f2::BitVec& coords) const {
  f2::BitVec v(width());
  for (std::size_t i = coords.find_first(); i != f2::BitVec::npos; i = coords.find_next(i + 1)) v ^= classes[i];
  return v;
}

ModuleSlice module_slice_over(const MomentGraph& g, unsigned label, const std::vector<f2::Monomial>& monomials,
                              unsigned poly_degree, Exec exec) {
  require_accepted(g);
  ModuleSlice slice;
  slice.degree = label;
  slice.nvars = g.n();
  slice.num_vertices = g.num_vertices();
  slice.basis = f2::MonomialBasis(monomials);
  const std::size_t m = slice.basis.size();
  if (m == 0) return slice;

  std::map<std::pair<std::vector<std::uint8_t>, unsigned>, std::vector<f2::BitVec>> cache;
  f2::F2Matrix constraints(slice.width());
  for (const auto& e : g.edges()) {
    auto key = std::make_pair(e.character, e.multiplicity);
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(key, f2::divisibility_functionals(g.character_form(e), e.multiplicity, slice.basis, poly_degree))
               .first;
    }
    for (const auto& f : it->second) {
      f2::BitVec row(slice.width());
      row.xor_at(e.u * m, f);
      row.xor_at(e.v * m, f);
      constraints.add_row(std::move(row));
    }
  }
  slice.classes = f2::nullspace(constraints, exec);
  return slice;
}

ModuleSlice module_slice(const MomentGraph& g, unsigned d, Exec exec) {
  return module_slice_over(g, d, f2::monomial_basis(g.n(), d), d, exec);
}

std::vector<EquivariantClass> basis_in_degree(const MomentGraph& g, unsigned d) {
  const auto slice = module_slice(g, d);
  std::vector<EquivariantClass> out;
  for (const auto& v : slice.classes) out.push_back(slice.to_class(v));
  return out;
}

std::vector<long> poincare_series(const MomentGraph& g, unsigned up_to, Exec exec) {
  if (exec == Exec::Serial) return reference::poincare_series_serial(g, up_to);
  require_accepted(g);
  std::vector<long> dims(up_to + 1, 0);
  const auto count = static_cast<std::ptrdiff_t>(up_to) + 1;
  // Higher degrees are the expensive ones; dynamic scheduling hands them out first.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto d = static_cast<unsigned>(count - 1 - i);
    dims[d] = static_cast<long>(module_slice(g, d, Exec::Serial).dim());
  }
  return dims;
}

namespace reference {

std::vector<long> poincare_series_serial(const MomentGraph& g, unsigned up_to) {
  std::vector<long> dims;
  for (unsigned d = 0; d <= up_to; ++d) dims.push_back(static_cast<long>(module_slice(g, d, Exec::Serial).dim()));
  return dims;
}

}  // namespace reference

const f2::F2Poly& restrict_to(const MomentGraph& g, const EquivariantClass& c, const std::string& vertex_id) {
  return c.values.at(g.index_of(vertex_id));
}

EquivariantClass product(const EquivariantClass& a, const EquivariantClass& b) {
  EquivariantClass c;
  c.degree = a.degree + b.degree;
  for (std::size_t p = 0; p < a.values.size(); ++p) c.values.push_back(f2::mul(a.values[p], b.values[p]));
  return c;
}

bool satisfies_edge_conditions(const MomentGraph& g, const EquivariantClass& c) {
  for (const auto& e : g.edges()) {
    const auto diff = f2::add(c.values[e.u], c.values[e.v]);
    if (!f2::divisible_power(diff, g.character_form(e), e.multiplicity).divisible) return false;
  }
  return true;
}

DualGradingReport dual_grading_report(const MomentGraph& g, unsigned up_to) {
  const auto report = require_accepted(g);
  if (report.status != ValidationStatus::Mod2GKM) {
    throw Error(ErrorKind::DegreeHalvingUnavailable, "degree halving holds only for mod-2 GKM graphs");
  }
  DualGradingReport out;
  out.real_dims = poincare_series(g, up_to);
  for (unsigned c = 0; c <= 2 * up_to; ++c) {
    const auto monomials = f2::weighted_monomial_basis(g.n(), c, 2);
    out.complex_dims.push_back(
        monomials.empty() ? 0 : static_cast<long>(module_slice_over(g, c, monomials, c / 2).dim()));
  }
  out.consistent = true;
  for (unsigned c = 0; c <= 2 * up_to; ++c) {
    const long expected = c % 2 ? 0 : out.real_dims[c / 2];
    if (out.complex_dims[c] != expected) out.consistent = false;
  }
  return out;
}

}  // namespace realkirwan
