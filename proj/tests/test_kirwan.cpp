#include "fixtures.hpp"
#include "oracle.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/f2/matrix.hpp"
#include "realkirwan/io.hpp"
#include "realkirwan/kirwan.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace realkirwan;

namespace {

RVec mu_of(const char* text) { return parse_rational_list(text); }

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

std::set<std::vector<int>> chamber_signs(const std::vector<Chamber>& cs) {
  std::set<std::vector<int>> out;
  for (const auto& c : cs) out.insert(c.signs);
  return out;
}

std::vector<RVec> normals_at(const MomentGraph& g, const RVec& mu) {
  std::vector<RVec> out;
  for (const auto& v : g.vertices()) out.push_back(sub(v.phi, mu));
  return out;
}

}  // namespace

TEST_CASE("regularity on the 1-skeleton") {
  const auto interval = fixtures::graph("delzant_interval");
  CHECK(check_regular(interval, mu_of("1/2")).regular);
  CHECK_FALSE(check_regular(interval, mu_of("0")).regular);
  const auto cp2 = fixtures::graph("cp2");
  const auto edge = check_regular(cp2, mu_of("1/2,0"));
  CHECK_FALSE(edge.regular);
  CHECK(edge.witness.find("edge") != std::string::npos);
  CHECK(check_regular(cp2, mu_of("1/3,1/3")).regular);
  CHECK(check_regular(sphere_swap_example(), mu_of("1/2")).regular);
  CHECK(kind_of([&] { reduce(cp2, mu_of("1/2,0")); }) == ErrorKind::IrregularValue);
  CHECK(kind_of([&] { reduce(cp2, mu_of("0,0")); }) == ErrorKind::IrregularValue);
}

TEST_CASE("chamber enumeration is limited to three dimensions") {
  RVec phi(4, Rational(0));
  MomentGraph g(4, 0, {{"p", phi}}, {});
  CHECK(kind_of([&] { chambers(g, RVec(4, Rational(1))); }) == ErrorKind::UnsupportedDimension);
}

TEST_CASE("kernel examples") {
  const auto swap = sphere_swap_example();
  CHECK(kernel_in_degree(swap, mu_of("1/2"), 1).dim() == 0);
  const auto k2 = kernel_in_degree(swap, mu_of("1/2"), 2);
  CHECK(k2.dim() == 2);
  CHECK(k2.module.dim() == 2);

  CHECK(kernel_in_degree(fixtures::graph("cp2"), mu_of("1/3,1/3"), 1).dim() == 3);

  for (const auto& c : fixtures::reduce_cases()) {
    if (c.graph == "point2") continue;
    CAPTURE(c.graph);
    CHECK(kernel_in_degree(fixtures::graph(c.graph), mu_of(c.mu.c_str()), 0).dim() == 0);
  }
}

TEST_CASE("reduction examples") {
  const auto swap = reduce(sphere_swap_example(), mu_of("1/2"), {std::nullopt, true});
  CHECK(swap.betti == std::vector<long>{1, 1});
  CHECK(swap.module_dims == std::vector<long>{1, 1, 2, 2, 2});
  CHECK(swap.quotient_dims == std::vector<long>{1, 1, 0, 0, 0});
  CHECK(swap.duality_checked);

  const auto cp2 = reduce(fixtures::graph("cp2"), mu_of("1/3,1/3"), {std::nullopt, true});
  CHECK(cp2.top_degree == 0);
  CHECK(cp2.betti == std::vector<long>{1});
  CHECK(cp2.chambers.size() == 6);
}

TEST_CASE("flag reduction agrees with the brute force oracle and the golden file") {
  const auto g = fixtures::graph("flag_a2");
  const auto mu = mu_of("1/3,1/5");
  const auto normals = normals_at(g, mu);
  const auto grid = oracle::grid_sign_vectors(normals, 2, 60);
  // Six pairwise independent lines through the origin cut the plane into 12 cones.
  CHECK(oracle::distinct_lines_2d(normals) == 6);
  CHECK(grid.size() == 12);

  const auto r = reduce(g, mu, {std::nullopt, true});
  CHECK(chamber_signs(r.chambers) == grid);
  for (unsigned d = 0; d <= 1; ++d) {
    const auto brute = oracle::brute_reduction(g, d, grid);
    CAPTURE(d);
    CHECK(r.module_dims[d] == brute.module_dim);
    CHECK(r.kernel_dims[d] == brute.kernel_dim);
    CHECK(r.betti[d] == brute.quotient_dim());
  }
  CHECK(r.betti[0] == r.betti[1]);

  const auto golden = io::read_json_file(std::string(RK_GOLDEN_DIR) + "/flag_a2_reduce.json");
  CHECK(io::report_to_json(g, r) == golden);
}

TEST_CASE("kernel dims agree with the brute force oracle") {
  struct Case {
    const char* graph;
    const char* mu;
    unsigned up_to;
  };
  for (const Case c : {Case{"sphere_swap", "1/2", 4}, Case{"cp2", "1/3,1/3", 2}, Case{"cp2", "2/3,1/5", 2},
                       Case{"delzant_square", "1/2,1/3", 2}, Case{"delzant_hirzebruch", "3/2,2/3", 2},
                       Case{"point2", "1,1", 3}}) {
    const auto g = fixtures::graph(c.graph);
    const auto mu = mu_of(c.mu);
    const auto cs = chambers(g, mu);
    const auto grid = oracle::grid_sign_vectors(normals_at(g, mu), g.n_phi(), 40);
    CHECK(chamber_signs(cs) == grid);
    for (unsigned d = 0; d <= c.up_to; ++d) {
      CAPTURE(c.graph);
      CAPTURE(d);
      const auto k = kernel_in_degree(g, cs, d);
      const auto brute = oracle::brute_reduction(g, d, grid);
      CHECK(k.module.dim() == brute.module_dim);
      CHECK(k.dim() == brute.kernel_dim);
    }
  }
}

TEST_CASE("property: kernel grows with chambers and ignores their order") {
  std::mt19937 rng(41);
  for (const auto& c : fixtures::reduce_cases()) {
    if (c.graph == "flag_a3") continue;
    const auto g = fixtures::graph(c.graph);
    const auto all = chambers(g, mu_of(c.mu.c_str()));
    for (unsigned d = 0; d <= 3; ++d) {
      CAPTURE(c.graph);
      CAPTURE(d);
      const auto full = kernel_in_degree(g, all, d);
      auto shuffled = all;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      const auto again = kernel_in_degree(g, shuffled, d);
      CHECK(again.dim() == full.dim());
      f2::RowSpace span(full.module.width());
      for (const auto& v : full.vectors) span.insert(v);
      for (const auto& v : again.vectors) CHECK(span.contains(v));

      std::vector<Chamber> partial;
      std::size_t previous = 0;
      for (const auto& ch : shuffled) {
        partial.push_back(ch);
        const auto k = kernel_in_degree(g, partial, d).dim();
        CHECK(k >= previous);
        previous = k;
      }
      CHECK(previous == full.dim());
    }
  }
}

TEST_CASE("property: the kernel is an ideal") {
  std::mt19937 rng(42);
  for (const auto& c : fixtures::reduce_cases()) {
    if (c.graph == "flag_a3" || c.graph == "point2") continue;
    const auto g = fixtures::graph(c.graph);
    const auto cs = chambers(g, mu_of(c.mu.c_str()));
    for (int t = 0; t < 10; ++t) {
      const unsigned dk = 1 + rng() % 2, dh = rng() % 3;
      const auto k = kernel_in_degree(g, cs, dk);
      if (k.dim() == 0) continue;
      f2::BitVec coords(k.dim());
      while (coords.none()) {
        for (std::size_t i = 0; i < k.dim(); ++i) coords.set(i, rng() & 1);
      }
      f2::BitVec kappa(k.module.width());
      for (std::size_t i = 0; i < k.dim(); ++i) {
        if (coords.test(i)) kappa ^= k.vectors[i];
      }
      const auto h_slice = module_slice(g, dh);
      f2::BitVec h(h_slice.width());
      for (const auto& v : h_slice.classes) {
        if (rng() & 1) h ^= v;
      }
      const auto prod = product(h_slice.to_class(h), k.module.to_class(kappa));
      CAPTURE(c.graph);
      CHECK(kernel_in_degree(g, cs, dk + dh).contains(prod));
    }
  }
}

TEST_CASE("property: reduction commutes with shifting the moment map") {
  for (const auto& c : fixtures::reduce_cases()) {
    const auto g = fixtures::graph(c.graph);
    const auto mu = mu_of(c.mu.c_str());
    const auto a = reduce(g, mu, {std::nullopt, true});
    const auto shifted = g.shifted(mu);
    const auto b = reduce(shifted, RVec(mu.size(), Rational(0)), {std::nullopt, true});
    CAPTURE(c.graph);
    CHECK(a.quotient_dims == b.quotient_dims);
    CHECK(a.kernel_dims == b.kernel_dims);
    CHECK(chamber_signs(a.chambers) == chamber_signs(b.chambers));
  }
}

TEST_CASE("property: quotients vanish above the top degree and are palindromic") {
  for (const auto& c : fixtures::reduce_cases()) {
    const auto g = fixtures::graph(c.graph);
    const auto r = reduce(g, mu_of(c.mu.c_str()), {std::nullopt, true});
    CAPTURE(c.graph);
    CHECK(r.vanishing_ok);
    for (std::size_t d = 0; d < r.quotient_dims.size(); ++d) {
      if (static_cast<int>(d) > r.top_degree) CHECK(r.quotient_dims[d] == 0);
    }
    if (g.is_closed() && r.top_degree >= 0) {
      CHECK(r.duality_checked);
      CHECK(r.duality_ok);
      auto rev = r.betti;
      std::reverse(rev.begin(), rev.end());
      CHECK(rev == r.betti);
    }
  }
}

TEST_CASE("duality is only checked when freeness is asserted") {
  const auto r = reduce(fixtures::graph("cp2"), mu_of("1/3,1/3"));
  CHECK_FALSE(r.duality_checked);
  CHECK(r.betti == std::vector<long>{1});
}
