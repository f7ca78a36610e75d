#include "realkirwan/errors.hpp"
#include "realkirwan/moment_graph.hpp"
#include "realkirwan/toric.hpp"

#include <algorithm>
#include <numeric>

namespace realkirwan {

MomentGraph from_delzant(const DelzantPolytope& p) {
  const auto faces = enumerate_faces(p);
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < faces.vertices.size(); ++i) {
    vertices.push_back(Vertex{"v" + std::to_string(i), faces.vertices[i]});
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : faces.edges) {
    const auto dir = primitive_integer_vector(sub(faces.vertices[v], faces.vertices[u]));
    Edge e;
    e.u = u;
    e.v = v;
    for (const auto& x : dir) e.character.push_back(static_cast<std::uint8_t>(boost::multiprecision::abs(x) % 2 == 1));
    edges.push_back(std::move(e));
  }
  return MomentGraph(p.dim, static_cast<unsigned>(p.dim), std::move(vertices), std::move(edges));
}

MomentGraph flag_type_A(const RVec& lambda) {
  const std::size_t k = lambda.size();
  if (k < 3) throw Error(ErrorKind::InvalidArgument, "flag_type_A needs at least three entries");
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (lambda[i] <= lambda[i + 1]) {
      throw Error(ErrorKind::NotRegularOrbit, "lambda must be strictly decreasing, got (" + format_rational_list(lambda) + ")");
    }
  }

  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> w(k);
  std::iota(w.begin(), w.end(), 0);
  do {
    perms.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));

  auto id_of = [](const std::vector<std::size_t>& perm) {
    std::string s;
    for (auto x : perm) s += std::to_string(x + 1);
    return s;
  };
  std::vector<Vertex> vertices;
  for (const auto& perm : perms) {
    RVec phi(k - 1);
    for (std::size_t i = 0; i + 1 < k; ++i) phi[i] = lambda[perm[i]] - lambda[perm[i + 1]];
    vertices.push_back(Vertex{id_of(perm), std::move(phi)});
  }

  std::vector<Edge> edges;
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        auto swapped = perms[a];
        std::swap(swapped[i], swapped[j]);
        const auto b = static_cast<std::size_t>(std::lower_bound(perms.begin(), perms.end(), swapped) - perms.begin());
        if (b < a) continue;
        Edge e;
        e.u = a;
        e.v = b;
        // e_i - e_j = alpha_i + ... + alpha_{j-1}
        e.character.assign(k - 1, 0);
        for (std::size_t s = i; s < j; ++s) e.character[s] = 1;
        edges.push_back(std::move(e));
      }
    }
  }
  return MomentGraph(k - 1, static_cast<unsigned>(k * (k - 1) / 2), std::move(vertices), std::move(edges));
}

MomentGraph sphere_swap_example() {
  std::vector<Vertex> vertices{Vertex{"south", {Rational(0)}}, Vertex{"north", {Rational(1)}}};
  std::vector<Edge> edges{Edge{0, 1, {1}, 2}};
  return MomentGraph(1, 2, std::move(vertices), std::move(edges));
}

}  // namespace realkirwan
