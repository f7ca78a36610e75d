#include "fixtures.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/morse.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace realkirwan;

namespace {

using U = std::vector<unsigned>;

// Three distinct generic directions: the default one plus random integer ones.
std::vector<Direction> directions(const MomentGraph& g, std::mt19937& rng) {
  std::vector<Direction> out{generic_direction(g)};
  std::uniform_int_distribution<int> coord(-9, 9);
  while (out.size() < 3) {
    Direction xi;
    for (std::size_t i = 0; i < g.n_phi(); ++i) xi.emplace_back(coord(rng));
    if (is_generic(g, xi) && std::find(out.begin(), out.end(), xi) == out.end()) out.push_back(xi);
  }
  return out;
}

}  // namespace

TEST_CASE("index examples") {
  const auto interval = fixtures::graph("delzant_interval");
  CHECK(is_generic(interval, generic_direction(interval)));
  CHECK(morse_indices(interval, {Rational(1)}).multiset() == U{0, 1});

  const auto cp2 = fixtures::graph("cp2");
  const auto xi = generic_direction(cp2);
  for (const auto& e : cp2.edges()) CHECK(dot(sub(cp2.vertices()[e.u].phi, cp2.vertices()[e.v].phi), xi) != 0);
  CHECK(morse_indices(cp2, xi).multiset() == U{0, 1, 2});

  const auto square = fixtures::graph("delzant_square");
  CHECK(is_generic(square, generic_direction(square)));
  CHECK(morse_indices(fixtures::graph("flag_a2"), {Rational(1), Rational(3)}).multiset() == U{0, 1, 1, 2, 2, 3});

  try {
    morse_indices(square, {Rational(1), Rational(0)});
    FAIL("expected NonGenericDirection");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonGenericDirection);
  }
}

TEST_CASE("perfection examples") {
  const auto swap = perfection_check(sphere_swap_example(), 6);
  CHECK(swap.ok);
  CHECK(swap.indices.multiset() == U{0, 2});
  CHECK(perfection_check(fixtures::graph("cp2"), 6).ok);
  CHECK(perfection_check(fixtures::graph("point2"), 6).ok);
  CHECK(morse_series(IndexTable{{0, 2}}, 1, 4) == std::vector<long>{1, 1, 2, 2, 2});
}

TEST_CASE("property: indices do not depend on the direction") {
  std::mt19937 rng(21);
  for (const auto& name : fixtures::accepted_graphs()) {
    const auto g = fixtures::graph(name);
    const auto dirs = directions(g, rng);
    const auto reference = morse_indices(g, dirs[0]).multiset();
    const unsigned up_to = std::min<unsigned>(g.q_dim() + 2, 6);
    const auto module = poincare_series(g, up_to);
    for (const auto& xi : dirs) {
      CAPTURE(name);
      CAPTURE(format_rational_list(xi));
      const auto t = morse_indices(g, xi);
      CHECK(t.multiset() == reference);
      CHECK(morse_series(t, g.n(), up_to) == module);
      // A single local minimum on every corpus graph.
      CHECK(std::count(t.lambda.begin(), t.lambda.end(), 0u) == 1);
    }
  }
}

TEST_CASE("property: reversing the direction complements the indices") {
  std::mt19937 rng(22);
  for (const auto& name : fixtures::accepted_graphs()) {
    const auto g = fixtures::graph(name);
    if (!g.is_closed()) continue;
    for (const auto& xi : directions(g, rng)) {
      const auto up = morse_indices(g, xi);
      const auto down = morse_indices(g, scale(xi, Rational(-1)));
      CAPTURE(name);
      for (std::size_t p = 0; p < g.num_vertices(); ++p) CHECK(down.lambda[p] == g.q_dim() - up.lambda[p]);
    }
  }
}
