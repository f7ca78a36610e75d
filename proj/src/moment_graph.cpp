#include "realkirwan/moment_graph.hpp"

#include "realkirwan/errors.hpp"

#include <algorithm>
#include <set>

namespace realkirwan {

bool Edge::is_torsion() const {
  return std::all_of(character.begin(), character.end(), [](std::uint8_t b) { return (b & 1u) == 0; });
}

MomentGraph::MomentGraph(std::size_t n, unsigned q_dim, std::vector<Vertex> vertices, std::vector<Edge> edges)
    : n_(n), n_phi_(0), q_dim_(q_dim), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (n_ == 0) throw Error(ErrorKind::InvalidGraph, "torus rank n must be positive");
  if (vertices_.empty()) throw Error(ErrorKind::InvalidGraph, "graph has no vertices");
  n_phi_ = vertices_.front().phi.size();
  if (n_phi_ == 0) throw Error(ErrorKind::InvalidGraph, "moment images must be nonempty vectors");
  std::set<std::string> ids;
  for (const auto& v : vertices_) {
    if (v.phi.size() != n_phi_) throw Error(ErrorKind::InvalidGraph, "vertex '" + v.id + "' has wrong moment length");
    if (!ids.insert(v.id).second) throw Error(ErrorKind::InvalidGraph, "duplicate vertex id '" + v.id + "'");
  }
  incident_.assign(vertices_.size(), {});
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto& edge = edges_[e];
    if (edge.u >= vertices_.size() || edge.v >= vertices_.size()) {
      throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " references a missing vertex");
    }
    if (edge.u == edge.v) throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " is a loop");
    if (edge.character.size() != n_) {
      throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " character has wrong length");
    }
    for (auto& b : edge.character) {
      if (b > 1) throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " character entries must be 0 or 1");
    }
    if (edge.multiplicity == 0) throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(e) + " has zero multiplicity");
    incident_[edge.u].push_back(e);
    incident_[edge.v].push_back(e);
  }
}

std::size_t MomentGraph::index_of(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].id == id) return i;
  }
  throw Error(ErrorKind::UnknownVertex, "no vertex '" + id + "'");
}

unsigned MomentGraph::weighted_degree(std::size_t p) const {
  unsigned d = 0;
  for (auto e : incident_[p]) d += edges_[e].multiplicity;
  return d;
}

bool MomentGraph::is_connected() const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto p = stack.back();
    stack.pop_back();
    for (auto e : incident_[p]) {
      const auto q = edges_[e].u == p ? edges_[e].v : edges_[e].u;
      if (!seen[q]) {
        seen[q] = true;
        ++count;
        stack.push_back(q);
      }
    }
  }
  return count == vertices_.size();
}

bool MomentGraph::is_closed() const {
  for (std::size_t p = 0; p < vertices_.size(); ++p) {
    if (weighted_degree(p) != q_dim_) return false;
  }
  return true;
}

MomentGraph MomentGraph::shifted(const RVec& mu) const {
  if (mu.size() != n_phi_) throw Error(ErrorKind::InvalidArgument, "shift vector has wrong length");
  auto verts = vertices_;
  for (auto& v : verts) v.phi = sub(v.phi, mu);
  return MomentGraph(n_, q_dim_, std::move(verts), edges_);
}

std::string_view to_string(ValidationStatus s) {
  switch (s) {
    case ValidationStatus::Mod2GKM: return "Mod2GKM";
    case ValidationStatus::MultiplicityMode: return "MultiplicityMode";
    case ValidationStatus::Rejected: return "Rejected";
  }
  return "Unknown";
}

ValidationReport validate(const MomentGraph& g) {
  if (!g.is_connected()) throw Error(ErrorKind::Disconnected, "moment graph is not connected");
  ValidationReport report;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    if (edge.is_torsion()) {
      report.torsion_witnesses.push_back(e);
      report.messages.push_back("edge " + std::to_string(e) + " (" + g.vertices()[edge.u].id + ", " +
                                g.vertices()[edge.v].id + ") has zero character mod 2: 2-torsion point");
    }
  }
  if (!report.torsion_witnesses.empty()) {
    report.status = ValidationStatus::Rejected;
    return report;
  }

  bool gkm = true;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    if (g.edges()[e].multiplicity > 1) {
      gkm = false;
      report.messages.push_back("edge " + std::to_string(e) + " has multiplicity " +
                                std::to_string(g.edges()[e].multiplicity));
    }
  }
  for (std::size_t p = 0; p < g.num_vertices(); ++p) {
    std::set<std::vector<std::uint8_t>> chars;
    for (auto e : g.incident(p)) {
      if (!chars.insert(g.edges()[e].character).second) {
        gkm = false;
        report.messages.push_back("vertex '" + g.vertices()[p].id + "' has a repeated character");
        break;
      }
    }
  }
  if (!g.is_closed()) report.messages.push_back("graph is not closed: incident multiplicities differ from q_dim");
  report.status = gkm ? ValidationStatus::Mod2GKM : ValidationStatus::MultiplicityMode;
  return report;
}

ValidationReport require_accepted(const MomentGraph& g) {
  auto report = validate(g);
  if (report.status == ValidationStatus::Rejected) {
    throw Error(ErrorKind::TwoTorsion, report.messages.front());
  }
  return report;
}

}  // namespace realkirwan
