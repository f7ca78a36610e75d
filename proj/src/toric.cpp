#include "realkirwan/toric.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/f2/matrix.hpp"
#include "realkirwan/f2/poly.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/moment_graph.hpp"
#include "realkirwan/morse.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace realkirwan {

namespace {

void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

RVec normal_of(const Facet& f) {
  RVec v;
  for (auto x : f.normal) v.emplace_back(x);
  return v;
}

void check_shape(const DelzantPolytope& p) {
  if (p.dim == 0) throw Error(ErrorKind::NotDelzant, "dimension must be positive");
  if (p.facets.size() < p.dim + 1) throw Error(ErrorKind::NotDelzant, "too few facets for a bounded polytope");
  for (std::size_t i = 0; i < p.facets.size(); ++i) {
    const auto& nrm = p.facets[i].normal;
    if (nrm.size() != p.dim) throw Error(ErrorKind::NotDelzant, "facet " + std::to_string(i) + " normal has wrong length");
    long long g = 0;
    for (auto x : nrm) g = std::gcd(g, x < 0 ? -x : x);
    if (g != 1) throw Error(ErrorKind::NotDelzant, "facet " + std::to_string(i) + " normal is not primitive");
  }
}

// Degreewise quotient of F2[x_F] by the face ideal and the linear relations,
// using `monomials` as the degree slice and `lower` as the slice one
// generator-degree below.
long danilov_slice(const DelzantPolytope& p, const PolytopeFaces& faces, const std::vector<f2::Monomial>& monomials,
                   const std::vector<f2::Monomial>& lower) {
  const std::size_t nf = p.facets.size();
  auto is_face = [&](const f2::Monomial& m) {
    for (const auto& vf : faces.vertex_facets) {
      bool all = true;
      for (std::size_t f = 0; f < nf && all; ++f) {
        if (m.exponents[f] > 0 && !std::binary_search(vf.begin(), vf.end(), f)) all = false;
      }
      if (all) return true;
    }
    return false;
  };
  // Monomials outside the face ideal form the ambient coordinates.
  std::vector<f2::Monomial> surviving;
  for (const auto& m : monomials) {
    if (is_face(m)) surviving.push_back(m);
  }
  const f2::MonomialBasis basis(surviving);
  f2::F2Matrix relations(basis.size());
  for (std::size_t i = 0; i < p.dim; ++i) {
    for (const auto& m : lower) {
      f2::BitVec row(basis.size());
      for (std::size_t f = 0; f < nf; ++f) {
        if ((p.facets[f].normal[i] & 1) == 0) continue;
        const auto idx = basis.index_of(m * f2::Monomial::variable(nf, f));
        if (idx != f2::BitVec::npos) row.flip(idx);
      }
      if (row.any()) relations.add_row(std::move(row));
    }
  }
  return static_cast<long>(basis.size()) - static_cast<long>(f2::rank(relations, Exec::Serial));
}

std::string vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

PolytopeFaces enumerate_faces(const DelzantPolytope& p) {
  check_shape(p);
  const std::size_t n = p.dim;
  std::vector<RVec> normals;
  for (const auto& f : p.facets) normals.push_back(normal_of(f));

  std::map<RVec, std::vector<std::size_t>> found;
  for_each_subset(p.facets.size(), n, [&](const std::vector<std::size_t>& subset) {
    RMatrix a;
    RVec b;
    for (auto f : subset) {
      a.push_back(normals[f]);
      b.push_back(-p.facets[f].offset);
    }
    auto x = qla::solve(a, b);
    if (!x) return;
    std::vector<std::size_t> tight;
    for (std::size_t f = 0; f < p.facets.size(); ++f) {
      const Rational slack = dot(normals[f], *x) + p.facets[f].offset;
      if (slack < 0) return;
      if (slack == 0) tight.push_back(f);
    }
    found.emplace(std::move(*x), std::move(tight));
  });
  if (found.empty()) throw Error(ErrorKind::NotDelzant, "polytope has no vertices (empty or unbounded)");

  PolytopeFaces faces;
  for (auto& [vertex, tight] : found) {
    const std::string where = "(" + format_rational_list(vertex) + ")";
    if (tight.size() != n) throw Error(ErrorKind::NotDelzant, "not simple at vertex " + where);
    RMatrix a;
    for (auto f : tight) a.push_back(normals[f]);
    const Rational det = qla::determinant(a);
    if (det != 1 && det != -1) throw Error(ErrorKind::NotDelzant, "not smooth at vertex " + where + ": determinant " + format_rational(det));
    faces.vertices.push_back(vertex);
    faces.vertex_facets.push_back(tight);
  }
  std::vector<std::size_t> degree(faces.vertices.size(), 0);
  for (std::size_t i = 0; i < faces.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < faces.vertices.size(); ++j) {
      std::vector<std::size_t> common;
      std::set_intersection(faces.vertex_facets[i].begin(), faces.vertex_facets[i].end(), faces.vertex_facets[j].begin(),
                            faces.vertex_facets[j].end(), std::back_inserter(common));
      if (common.size() + 1 == n) {
        faces.edges.emplace_back(i, j);
        ++degree[i];
        ++degree[j];
      }
    }
  }
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (degree[i] != n) {
      throw Error(ErrorKind::NotDelzant, "unbounded: vertex (" + format_rational_list(faces.vertices[i]) + ") has " +
                                             std::to_string(degree[i]) + " edges");
    }
  }
  std::vector<bool> used(p.facets.size(), false);
  for (const auto& vf : faces.vertex_facets) {
    for (auto f : vf) used[f] = true;
  }
  for (std::size_t f = 0; f < used.size(); ++f) {
    if (!used[f]) throw Error(ErrorKind::NotDelzant, "facet " + std::to_string(f) + " touches no vertex");
  }
  return faces;
}

std::vector<long> danilov_dims(const DelzantPolytope& p, unsigned up_to) {
  const auto faces = enumerate_faces(p);
  const std::size_t nf = p.facets.size();
  std::vector<long> dims;
  for (unsigned j = 0; j <= up_to; ++j) {
    const auto lower = j == 0 ? std::vector<f2::Monomial>{} : f2::monomial_basis(nf, j - 1);
    dims.push_back(danilov_slice(p, faces, f2::monomial_basis(nf, j), lower));
  }
  return dims;
}

std::vector<long> danilov_dims(const DelzantPolytope& p) { return danilov_dims(p, static_cast<unsigned>(p.dim)); }

std::vector<long> danilov_dims_complex(const DelzantPolytope& p, unsigned up_to) {
  const auto faces = enumerate_faces(p);
  const std::size_t nf = p.facets.size();
  std::vector<long> dims;
  for (unsigned c = 0; c <= up_to; ++c) {
    const auto slice = f2::weighted_monomial_basis(nf, c, 2);
    if (slice.empty()) {
      dims.push_back(0);
      continue;
    }
    const auto lower = c < 2 ? std::vector<f2::Monomial>{} : f2::weighted_monomial_basis(nf, c - 2, 2);
    dims.push_back(danilov_slice(p, faces, slice, lower));
  }
  return dims;
}

ToricCrossCheck cross_check(const DelzantPolytope& p) {
  ToricCrossCheck out;
  const auto faces = enumerate_faces(p);
  const auto dim = static_cast<unsigned>(p.dim);
  out.vertex_count = faces.vertices.size();
  out.danilov = danilov_dims(p, dim + 1);
  if (out.danilov.back() != 0) {
    throw Error(ErrorKind::OracleMismatch, "Danilov ring nonzero in degree " + std::to_string(dim + 1));
  }
  out.danilov.pop_back();
  out.reversed.assign(out.danilov.rbegin(), out.danilov.rend());

  const MomentGraph g = from_delzant(p);
  if (validate(g).status != ValidationStatus::Mod2GKM) {
    throw Error(ErrorKind::OracleMismatch, "Delzant moment graph is not mod-2 GKM");
  }
  const auto xi = generic_direction(g);
  const auto indices = morse_indices(g, xi);
  out.morse_counts.assign(g.q_dim() + 1, 0);
  for (auto l : indices.lambda) ++out.morse_counts.at(l);

  for (std::size_t d = 0; d <= dim; ++d) {
    if (out.danilov[d] != out.morse_counts[d] || out.danilov[d] != out.reversed[d]) {
      throw Error(ErrorKind::OracleMismatch, "degree " + std::to_string(d) + ": danilov " + vec_str(out.danilov) +
                                                 ", morse " + vec_str(out.morse_counts) + ", reversed " +
                                                 vec_str(out.reversed));
    }
  }
  const long total = std::accumulate(out.danilov.begin(), out.danilov.end(), 0L);
  if (total != static_cast<long>(out.vertex_count)) {
    throw Error(ErrorKind::OracleMismatch, "h-vector sums to " + std::to_string(total) + " but polytope has " +
                                               std::to_string(out.vertex_count) + " vertices");
  }

  const auto perf = perfection_check(g, dim + 2, xi);
  out.perfection = perf.ok;
  out.gkm_dims = perf.module_dims;
  if (!perf.ok) throw Error(ErrorKind::OracleMismatch, "equivariant module is not perfect: " + vec_str(perf.module_dims));

  const auto dual = dual_grading_report(g, dim + 2);
  out.degree_halving = dual.consistent;
  out.gkm_complex_dims = dual.complex_dims;
  if (!dual.consistent) throw Error(ErrorKind::OracleMismatch, "degree halving fails on the moment graph");

  out.danilov_complex = danilov_dims_complex(p, 2 * dim);
  for (unsigned c = 0; c <= 2 * dim; ++c) {
    const long expected = c % 2 ? 0 : out.danilov[c / 2];
    if (out.danilov_complex[c] != expected) {
      throw Error(ErrorKind::OracleMismatch, "complex degree " + std::to_string(c) + " of the Danilov ring");
    }
  }
  return out;
}

}  // namespace realkirwan
