#include "realkirwan/kirwan.hpp"

#include "realkirwan/arrangement.hpp"
#include "realkirwan/errors.hpp"
#include "realkirwan/f2/matrix.hpp"

namespace realkirwan {

RegularityCheck check_regular(const MomentGraph& g, const RVec& mu) {
  if (mu.size() != g.n_phi()) throw Error(ErrorKind::InvalidArgument, "mu has wrong length");
  for (const auto& v : g.vertices()) {
    if (v.phi == mu) return {false, "mu equals the moment image of vertex '" + v.id + "'"};
  }
  // Interior points of an edge sphere are fixed by the (n-1)-dimensional
  // kernel of its weight, which is a finite group when n = 1.
  if (g.n() < 2) return {};
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    const auto& a = g.vertices()[e.u].phi;
    const auto delta = sub(g.vertices()[e.v].phi, a);
    const auto offset = sub(mu, a);
    std::size_t k = 0;
    while (k < delta.size() && delta[k] == 0) ++k;
    if (k == delta.size()) continue;
    const Rational t = offset[k] / delta[k];
    if (t < 0 || t > 1) continue;
    if (scale(delta, t) == offset) {
      return {false, "mu lies on edge " + std::to_string(i) + " segment [" + g.vertices()[e.u].id + ", " +
                         g.vertices()[e.v].id + "]"};
    }
  }
  return {};
}

std::vector<Chamber> chambers(const MomentGraph& g, const RVec& mu) {
  if (g.n_phi() > 3) {
    throw Error(ErrorKind::UnsupportedDimension,
                "chamber enumeration supports moment dimension <= 3, got " + std::to_string(g.n_phi()));
  }
  if (mu.size() != g.n_phi()) throw Error(ErrorKind::InvalidArgument, "mu has wrong length");
  std::vector<RVec> normals;
  for (const auto& v : g.vertices()) {
    normals.push_back(sub(v.phi, mu));
    if (is_zero(normals.back())) throw Error(ErrorKind::IrregularValue, "mu equals the moment image of '" + v.id + "'");
  }
  std::vector<Chamber> out;
  for (auto& xi : central_chambers(normals, g.n_phi())) {
    auto signs = sign_vector(normals, xi);
    out.push_back(Chamber{std::move(xi), std::move(signs)});
  }
  return out;
}

bool KernelSlice::contains(const EquivariantClass& c) const {
  f2::RowSpace span(module.width());
  for (const auto& v : vectors) span.insert(v);
  return span.contains(module.to_vector(c));
}

std::vector<f2::BitVec> chamber_kernel(const ModuleSlice& slice, const Chamber& chamber) {
  const std::size_t m = slice.basis.size();
  // Rows: value coordinates at negative vertices; columns: module classes.
  f2::F2Matrix restriction(slice.dim());
  for (std::size_t p = 0; p < slice.num_vertices; ++p) {
    if (chamber.signs[p] > 0) continue;
    for (std::size_t a = 0; a < m; ++a) {
      f2::BitVec row(slice.dim());
      for (std::size_t i = 0; i < slice.dim(); ++i) {
        if (slice.classes[i].test(p * m + a)) row.set(i);
      }
      if (row.any()) restriction.add_row(std::move(row));
    }
  }
  return f2::nullspace(restriction, Exec::Serial);
}

namespace {

KernelSlice assemble(ModuleSlice module, const std::vector<std::vector<f2::BitVec>>& per_chamber) {
  KernelSlice out;
  out.degree = module.degree;
  f2::RowSpace span(module.dim());
  for (const auto& k : per_chamber) {
    out.chamber_dims.push_back(static_cast<long>(k.size()));
    for (const auto& v : k) span.insert(v);
  }
  out.coords = span.original_basis();
  for (const auto& c : out.coords) out.vectors.push_back(module.combine(c));
  out.module = std::move(module);
  return out;
}

}  // namespace

KernelSlice kernel_in_degree(const MomentGraph& g, const std::vector<Chamber>& chambers, unsigned d, Exec exec) {
  if (exec == Exec::Serial) return reference::kernel_in_degree_serial(g, chambers, d);
  auto module = module_slice(g, d, Exec::Parallel);
  std::vector<std::vector<f2::BitVec>> per_chamber(chambers.size());
  const auto count = static_cast<std::ptrdiff_t>(chambers.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    per_chamber[static_cast<std::size_t>(i)] = chamber_kernel(module, chambers[static_cast<std::size_t>(i)]);
  }
  return assemble(std::move(module), per_chamber);
}

KernelSlice kernel_in_degree(const MomentGraph& g, const RVec& mu, unsigned d, Exec exec) {
  const auto reg = check_regular(g, mu);
  if (!reg.regular) throw Error(ErrorKind::IrregularValue, reg.witness);
  return kernel_in_degree(g, chambers(g, mu), d, exec);
}

namespace reference {

KernelSlice kernel_in_degree_serial(const MomentGraph& g, const std::vector<Chamber>& chambers, unsigned d) {
  auto module = module_slice(g, d, Exec::Serial);
  std::vector<std::vector<f2::BitVec>> per_chamber;
  for (const auto& c : chambers) per_chamber.push_back(chamber_kernel(module, c));
  return assemble(std::move(module), per_chamber);
}

}  // namespace reference

ReductionReport reduce(const MomentGraph& g, const RVec& mu, const ReduceOptions& options) {
  const auto validation = require_accepted(g);
  if (g.n_phi() != g.n()) {
    throw Error(ErrorKind::InvalidArgument, "reduction needs moment coordinates in the effective torus (n_phi = n)");
  }
  const auto reg = check_regular(g, mu);
  if (!reg.regular) throw Error(ErrorKind::IrregularValue, reg.witness);

  ReductionReport r;
  r.mu = mu;
  r.validation = validation.status;
  r.assert_free = options.assert_free;
  r.closed = g.is_closed();
  r.top_degree = static_cast<int>(g.q_dim()) - static_cast<int>(g.n());
  const int default_up_to = std::max(r.top_degree + 3, 0);
  r.up_to = options.up_to.value_or(static_cast<unsigned>(default_up_to));
  r.chambers = chambers(g, mu);

  for (unsigned d = 0; d <= r.up_to; ++d) {
    const auto k = kernel_in_degree(g, r.chambers, d, options.exec);
    r.module_dims.push_back(static_cast<long>(k.module.dim()));
    r.kernel_dims.push_back(static_cast<long>(k.dim()));
    r.quotient_dims.push_back(r.module_dims.back() - r.kernel_dims.back());
  }
  for (int d = 0; d <= r.top_degree && d <= static_cast<int>(r.up_to); ++d) r.betti.push_back(r.quotient_dims[d]);

  r.vanishing_ok = true;
  for (unsigned d = 0; d <= r.up_to; ++d) {
    if (static_cast<int>(d) > r.top_degree && r.quotient_dims[d] != 0) r.vanishing_ok = false;
  }
  r.duality_checked = r.closed && r.assert_free && r.top_degree >= 0 && static_cast<int>(r.up_to) >= r.top_degree;
  if (r.duality_checked) {
    r.duality_ok = true;
    for (int k = 0; k <= r.top_degree; ++k) {
      if (r.betti[k] != r.betti[r.top_degree - k]) r.duality_ok = false;
    }
  }

  r.notes.push_back("chambers: open-chamber representatives only; wall directions give kernels contained in an adjacent chamber's");
  if (r.validation == ValidationStatus::MultiplicityMode) {
    r.notes.push_back("multiplicity-mode graph: module is a model validated by the formality series");
  }
  if (!r.assert_free) r.notes.push_back("free action on the level set not asserted; duality not checked");

  auto dims_str = [](const std::vector<long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  if (!r.vanishing_ok) {
    throw Error(ErrorKind::ModelInconsistency, "quotient dims (" + dims_str(r.quotient_dims) +
                                                   ") do not vanish above degree " + std::to_string(r.top_degree));
  }
  if (r.duality_checked && !r.duality_ok) {
    throw Error(ErrorKind::ModelInconsistency, "quotient Betti numbers (" + dims_str(r.betti) + ") are not palindromic");
  }
  return r;
}

}  // namespace realkirwan
