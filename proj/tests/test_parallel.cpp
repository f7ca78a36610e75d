#include "fixtures.hpp"

#include "realkirwan/f2/matrix.hpp"
#include "realkirwan/gkm_module.hpp"
#include "realkirwan/kirwan.hpp"

#include <doctest.h>

#include <random>

using namespace realkirwan;

TEST_CASE("parallel rref matches the serial reference") {
  std::mt19937 rng(51);
  // Large enough to cross the threshold for threaded elimination.
  for (const auto [r, c] : {std::pair{1500, 700}, std::pair{400, 3000}, std::pair{2000, 2000}}) {
    f2::F2Matrix m(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) m.set(i, j, rng() & 1);
    }
    // Plant dependent rows so the rank is not full.
    for (int i = 0; i + 1 < r; i += 7) m.row(i) = m.row(i + 1);
    const auto a = f2::rref(m, Exec::Parallel);
    const auto b = f2::reference::rref_serial(m);
    CHECK(a.rank == b.rank);
    CHECK(a.pivots == b.pivots);
    CHECK(a.reduced == b.reduced);
  }
}

TEST_CASE("parallel series match the serial reference") {
  for (const auto& name : {"flag_a3", "delzant_simplex3", "flag_a2"}) {
    const auto g = fixtures::graph(name);
    CAPTURE(name);
    CHECK(poincare_series(g, 8, Exec::Parallel) == reference::poincare_series_serial(g, 8));
  }
}

TEST_CASE("parallel kernels match the serial reference") {
  for (const auto& c : fixtures::reduce_cases()) {
    const auto g = fixtures::graph(c.graph);
    const auto cs = chambers(g, parse_rational_list(c.mu));
    for (unsigned d = 0; d <= 4; ++d) {
      const auto a = kernel_in_degree(g, cs, d, Exec::Parallel);
      const auto b = reference::kernel_in_degree_serial(g, cs, d);
      CAPTURE(c.graph);
      CAPTURE(d);
      CHECK(a.coords == b.coords);
      CHECK(a.chamber_dims == b.chamber_dims);
    }
  }
}
