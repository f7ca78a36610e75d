#include "realkirwan/io.hpp"

#include "realkirwan/errors.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace realkirwan::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, where + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

long long integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<long long>();
}

const json& array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

Rational rational(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) fail(where, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

json rvec_to_json(const RVec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

json dims_to_json(const std::vector<long>& v) { return json(v); }

}  // namespace

json poly_to_json(const f2::F2Poly& p) {
  json out = json::array();
  for (const auto& m : p.terms()) out.push_back(m.exponents);
  return out;
}

f2::F2Poly poly_from_json(const json& j, std::size_t nvars, unsigned degree) {
  array(j, "polynomial");
  std::vector<f2::Monomial> terms;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string where = "polynomial/" + std::to_string(i);
    const auto& e = array(j[i], where);
    if (e.size() != nvars) fail(where, "exponent vector has wrong length");
    f2::Monomial m;
    for (std::size_t k = 0; k < e.size(); ++k) {
      const auto x = integer(e[k], where);
      if (x < 0) fail(where, "negative exponent");
      m.exponents.push_back(static_cast<unsigned>(x));
    }
    if (m.degree() != degree) fail(where, "monomial degree differs from class degree");
    terms.push_back(std::move(m));
  }
  return f2::F2Poly(nvars, degree, std::move(terms));
}

json graph_to_json(const MomentGraph& g) {
  json out;
  out["n"] = g.n();
  out["q_dim"] = g.q_dim();
  out["vertices"] = json::array();
  for (const auto& v : g.vertices()) out["vertices"].push_back({{"id", v.id}, {"phi", rvec_to_json(v.phi)}});
  out["edges"] = json::array();
  for (const auto& e : g.edges()) {
    json ch = json::array();
    for (auto b : e.character) ch.push_back(static_cast<int>(b));
    out["edges"].push_back(
        {{"u", g.vertices()[e.u].id}, {"v", g.vertices()[e.v].id}, {"char", ch}, {"mult", e.multiplicity}});
  }
  return out;
}

MomentGraph graph_from_json(const json& j) {
  const auto n = integer(field(j, "n", "/"), "/n");
  const auto q_dim = integer(field(j, "q_dim", "/"), "/q_dim");
  if (n <= 0) fail("/n", "must be positive");
  if (q_dim < 0) fail("/q_dim", "must be non-negative");

  std::vector<Vertex> vertices;
  std::map<std::string, std::size_t> index;
  const auto& vs = array(field(j, "vertices", "/"), "/vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string where = "/vertices/" + std::to_string(i);
    const auto& id = field(vs[i], "id", where);
    if (!id.is_string()) fail(where + "/id", "expected a string");
    Vertex v{id.get<std::string>(), {}};
    const auto& phi = array(field(vs[i], "phi", where), where + "/phi");
    for (std::size_t k = 0; k < phi.size(); ++k) v.phi.push_back(rational(phi[k], where + "/phi/" + std::to_string(k)));
    index.emplace(v.id, vertices.size());
    vertices.push_back(std::move(v));
  }

  std::vector<Edge> edges;
  const auto& es = array(field(j, "edges", "/"), "/edges");
  for (std::size_t i = 0; i < es.size(); ++i) {
    const std::string where = "/edges/" + std::to_string(i);
    Edge e;
    for (const char* key : {"u", "v"}) {
      const auto& end = field(es[i], key, where);
      if (!end.is_string()) fail(where + "/" + key, "expected a vertex id");
      const auto it = index.find(end.get<std::string>());
      if (it == index.end()) fail(where + "/" + key, "unknown vertex '" + end.get<std::string>() + "'");
      (key[0] == 'u' ? e.u : e.v) = it->second;
    }
    const auto& ch = array(field(es[i], "char", where), where + "/char");
    for (std::size_t k = 0; k < ch.size(); ++k) {
      const auto b = integer(ch[k], where + "/char/" + std::to_string(k));
      if (b != 0 && b != 1) fail(where + "/char/" + std::to_string(k), "character entries must be 0 or 1");
      e.character.push_back(static_cast<std::uint8_t>(b));
    }
    const auto mult = es[i].contains("mult") ? integer(es[i]["mult"], where + "/mult") : 1;
    if (mult <= 0) fail(where + "/mult", "multiplicity must be positive");
    e.multiplicity = static_cast<unsigned>(mult);
    edges.push_back(std::move(e));
  }
  try {
    return MomentGraph(static_cast<std::size_t>(n), static_cast<unsigned>(q_dim), std::move(vertices), std::move(edges));
  } catch (const Error& err) {
    fail("/", err.what());
  }
}

json polytope_to_json(const DelzantPolytope& p) {
  json out;
  out["dim"] = p.dim;
  out["facets"] = json::array();
  for (const auto& f : p.facets) out["facets"].push_back({{"normal", f.normal}, {"offset", format_rational(f.offset)}});
  return out;
}

DelzantPolytope polytope_from_json(const json& j) {
  DelzantPolytope p;
  const auto dim = integer(field(j, "dim", "/"), "/dim");
  if (dim <= 0) fail("/dim", "must be positive");
  p.dim = static_cast<std::size_t>(dim);
  const auto& fs = array(field(j, "facets", "/"), "/facets");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string where = "/facets/" + std::to_string(i);
    Facet f;
    const auto& nrm = array(field(fs[i], "normal", where), where + "/normal");
    for (std::size_t k = 0; k < nrm.size(); ++k) f.normal.push_back(integer(nrm[k], where + "/normal/" + std::to_string(k)));
    f.offset = rational(field(fs[i], "offset", where), where + "/offset");
    p.facets.push_back(std::move(f));
  }
  return p;
}

json class_to_json(const MomentGraph& g, const EquivariantClass& c) {
  json out;
  out["degree"] = c.degree;
  out["values"] = json::object();
  for (std::size_t p = 0; p < g.num_vertices(); ++p) out["values"][g.vertices()[p].id] = poly_to_json(c.values[p]);
  return out;
}

EquivariantClass class_from_json(const MomentGraph& g, const json& j) {
  EquivariantClass c;
  const auto d = integer(field(j, "degree", "/"), "/degree");
  if (d < 0) fail("/degree", "must be non-negative");
  c.degree = static_cast<unsigned>(d);
  const auto& values = field(j, "values", "/");
  if (!values.is_object()) fail("/values", "expected an object keyed by vertex id");
  for (const auto& v : g.vertices()) {
    if (!values.contains(v.id)) fail("/values", "missing vertex '" + v.id + "'");
    c.values.push_back(poly_from_json(values[v.id], g.n(), c.degree));
  }
  if (values.size() != g.num_vertices()) fail("/values", "unknown vertex ids present");
  return c;
}

json index_table_to_json(const MomentGraph& g, const IndexTable& t) {
  json out = json::object();
  for (std::size_t p = 0; p < g.num_vertices(); ++p) out[g.vertices()[p].id] = t.lambda[p];
  return out;
}

json chamber_to_json(const MomentGraph& g, const Chamber& c) {
  json signs = json::object();
  for (std::size_t p = 0; p < g.num_vertices(); ++p) signs[g.vertices()[p].id] = c.signs[p] > 0 ? "+" : "-";
  return {{"xi", rvec_to_json(c.xi)}, {"signs", signs}};
}

json validation_to_json(const MomentGraph& g, const ValidationReport& r) {
  json out;
  out["status"] = std::string(to_string(r.status));
  out["torsion_witnesses"] = json::array();
  for (auto e : r.torsion_witnesses) {
    const auto& edge = g.edges()[e];
    out["torsion_witnesses"].push_back({{"edge", e}, {"u", g.vertices()[edge.u].id}, {"v", g.vertices()[edge.v].id}});
  }
  out["messages"] = r.messages;
  out["closed"] = g.is_closed();
  return out;
}

json report_to_json(const MomentGraph& g, const ReductionReport& r) {
  json out;
  out["mu"] = rvec_to_json(r.mu);
  out["up_to"] = r.up_to;
  out["top_degree"] = r.top_degree;
  out["chambers"] = json::array();
  for (const auto& c : r.chambers) out["chambers"].push_back(chamber_to_json(g, c));
  out["module_dims"] = dims_to_json(r.module_dims);
  out["kernel_dims"] = dims_to_json(r.kernel_dims);
  out["quotient_dims"] = dims_to_json(r.quotient_dims);
  out["betti"] = dims_to_json(r.betti);
  out["assertions"] = {{"vanishing_above_top_degree", r.vanishing_ok},
                       {"duality_checked", r.duality_checked},
                       {"duality", r.duality_ok}};
  out["hypotheses"] = {{"assert_free", r.assert_free},
                       {"regularity", r.regularity},
                       {"validation", std::string(to_string(r.validation))},
                       {"closed", r.closed}};
  out["notes"] = r.notes;
  return out;
}

json cross_check_to_json(const ToricCrossCheck& c) {
  return {{"h_vector", c.danilov},
          {"morse_counts", c.morse_counts},
          {"reversed", c.reversed},
          {"vertex_count", c.vertex_count},
          {"equivariant_dims", c.gkm_dims},
          {"equivariant_complex_dims", c.gkm_complex_dims},
          {"danilov_complex_dims", c.danilov_complex},
          {"perfection", c.perfection},
          {"degree_halving", c.degree_halving},
          {"agreement", true}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path.string() + " at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace realkirwan::io
