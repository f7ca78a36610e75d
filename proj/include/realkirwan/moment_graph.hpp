#pragma once

#include "realkirwan/f2/poly.hpp"
#include "realkirwan/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace realkirwan {

struct DelzantPolytope;

/// A fixed point of the real torus together with its moment image.
struct Vertex {
  std::string id;
  RVec phi;

  bool operator==(const Vertex&) const = default;
};

/// An invariant sphere joining two fixed points. The character is the mod-2
/// reduction of the isotropy weight; multiplicity counts how many copies of
/// that character the normal representation carries.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::vector<std::uint8_t> character;
  unsigned multiplicity = 1;

  bool is_torsion() const;
  bool operator==(const Edge&) const = default;
};

/// Combinatorial model of a real locus Q with its (Z/2)^n action and moment
/// map. Construction checks structure only (ids, endpoints, vector lengths);
/// the mathematical checks live in validate().
class MomentGraph {
 public:
  MomentGraph(std::size_t n, unsigned q_dim, std::vector<Vertex> vertices, std::vector<Edge> edges);

  std::size_t n() const { return n_; }
  std::size_t n_phi() const { return n_phi_; }
  unsigned q_dim() const { return q_dim_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  /// Throws Error(UnknownVertex).
  std::size_t index_of(const std::string& id) const;
  /// Edge indices incident to vertex p.
  const std::vector<std::size_t>& incident(std::size_t p) const { return incident_[p]; }
  unsigned weighted_degree(std::size_t p) const;

  bool is_connected() const;
  /// Every vertex carries incident multiplicity exactly q_dim.
  bool is_closed() const;

  f2::F2Poly character_form(const Edge& e) const { return f2::F2Poly::linear_form(n_, e.character); }

  /// Copy with every moment image translated by -mu.
  MomentGraph shifted(const RVec& mu) const;

  bool operator==(const MomentGraph& other) const {
    return n_ == other.n_ && q_dim_ == other.q_dim_ && vertices_ == other.vertices_ && edges_ == other.edges_;
  }

 private:
  std::size_t n_;
  std::size_t n_phi_;
  unsigned q_dim_;
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

enum class ValidationStatus { Mod2GKM, MultiplicityMode, Rejected };

std::string_view to_string(ValidationStatus s);

struct ValidationReport {
  ValidationStatus status = ValidationStatus::Rejected;
  /// Indices of edges whose character vanishes mod 2.
  std::vector<std::size_t> torsion_witnesses;
  std::vector<std::string> messages;
};

/// Torsion and mod-2 GKM check. Throws Error(Disconnected).
ValidationReport validate(const MomentGraph& g);

/// Throws Error(TwoTorsion) unless validate(g) accepts the graph.
ValidationReport require_accepted(const MomentGraph& g);

/// Graph of a Delzant polytope: vertices, edges, and primitive edge
/// directions reduced mod 2. Throws Error(NotDelzant).
MomentGraph from_delzant(const DelzantPolytope& p);

/// Type-A coadjoint orbit through a regular lambda, in the effective
/// rank-(k-1) torus. Vertices are permutations; moment coordinates are the
/// consecutive differences p_i - p_{i+1}; the edge swapping positions i < j
/// carries the mod-2 root e_i - e_j written in the simple-root basis.
/// Throws Error(NotRegularOrbit) for repeated entries.
MomentGraph flag_type_A(const RVec& lambda);

/// Diagonal CP^1 in CP^1 x CP^1 under the factor swap: two poles, one edge
/// with the nontrivial character of multiplicity two.
MomentGraph sphere_swap_example();

}  // namespace realkirwan
