#include "fixtures.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/toric.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace realkirwan;

namespace {

using L = std::vector<long>;

RVec R(std::initializer_list<int> xs) {
  RVec v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::InvalidArgument;
}

long binom(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// h-vector from the face numbers of a simple polytope: an i-face is the
// intersection of d - i facets through some vertex.
L h_from_faces(const DelzantPolytope& p) {
  const auto faces = enumerate_faces(p);
  const long d = static_cast<long>(p.dim);
  std::vector<std::set<std::vector<std::size_t>>> by_codim(p.dim + 1);
  for (const auto& fs : faces.vertex_facets) {
    auto sorted = fs;
    std::sort(sorted.begin(), sorted.end());
    for (unsigned mask = 0; mask < (1u << sorted.size()); ++mask) {
      std::vector<std::size_t> subset;
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (mask >> i & 1) subset.push_back(sorted[i]);
      }
      by_codim[subset.size()].insert(subset);
    }
  }
  L f(p.dim + 1);
  for (long i = 0; i <= d; ++i) f[i] = static_cast<long>(by_codim[d - i].size());
  L h(p.dim + 1, 0);
  for (long k = 0; k <= d; ++k) {
    for (long i = k; i <= d; ++i) h[k] += ((i - k) % 2 ? -1 : 1) * binom(i, k) * f[i];
  }
  return h;
}

// Image under x -> A x + b where the normals transform by the integer matrix
// N = A^{-T}; offsets shift by <N n, b>.
DelzantPolytope transform(const DelzantPolytope& p, const std::vector<std::vector<long long>>& N, const RVec& b) {
  DelzantPolytope out{p.dim, {}};
  for (const auto& f : p.facets) {
    std::vector<long long> n(p.dim, 0);
    for (std::size_t i = 0; i < p.dim; ++i) {
      for (std::size_t j = 0; j < p.dim; ++j) n[i] += N[i][j] * f.normal[j];
    }
    Rational shift = 0;
    for (std::size_t i = 0; i < p.dim; ++i) shift += Rational(n[i]) * b[i];
    out.facets.push_back(Facet{n, f.offset - shift});
  }
  return out;
}

}  // namespace

TEST_CASE("vertex enumeration") {
  auto f = enumerate_faces(fixtures::polytope("simplex"));
  CHECK(f.vertices == std::vector<RVec>{R({0, 0}), R({0, 1}), R({1, 0})});
  f = enumerate_faces(fixtures::polytope("square"));
  CHECK(f.vertices.size() == 4);
  CHECK(f.edges.size() == 4);
  f = enumerate_faces(fixtures::polytope("hirzebruch"));
  CHECK(f.vertices == std::vector<RVec>{R({0, 0}), R({0, 1}), R({1, 0}), R({2, 1})});
}

TEST_CASE("danilov dimensions") {
  CHECK(danilov_dims(fixtures::polytope("simplex")) == L{1, 1, 1});
  CHECK(danilov_dims(fixtures::polytope("square")) == L{1, 2, 1});
  CHECK(danilov_dims(fixtures::polytope("interval")) == L{1, 1});
  CHECK(danilov_dims(fixtures::polytope("hirzebruch")) == L{1, 2, 1});
  CHECK(danilov_dims(fixtures::polytope("simplex3")) == L{1, 1, 1, 1});
  CHECK(danilov_dims(fixtures::polytope("square"), 4) == L{1, 2, 1, 0, 0});
}

TEST_CASE("danilov dimensions match the face-number oracle") {
  for (const auto& name : fixtures::smooth_polytopes()) {
    const auto p = fixtures::polytope(name);
    const auto h = danilov_dims(p);
    CAPTURE(name);
    CHECK(h == h_from_faces(p));
    auto rev = h;
    std::reverse(rev.begin(), rev.end());
    CHECK(rev == h);
    long sum = 0;
    for (auto x : h) sum += x;
    CHECK(sum == static_cast<long>(enumerate_faces(p).vertices.size()));
  }
}

TEST_CASE("property: danilov dimensions are invariant under unimodular maps") {
  const std::vector<std::vector<std::vector<long long>>> planar = {
      {{1, 1}, {0, 1}}, {{0, -1}, {1, 0}}, {{2, 1}, {1, 1}}};
  const std::vector<std::vector<std::vector<long long>>> spatial = {
      {{1, 0, 1}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}, {{1, 1, 0}, {0, 1, 1}, {0, 0, 1}}};
  for (const auto& name : fixtures::smooth_polytopes()) {
    const auto p = fixtures::polytope(name);
    const auto h = danilov_dims(p);
    if (p.dim == 1) {
      CHECK(danilov_dims(transform(p, {{-1}}, R({5}))) == h);
      continue;
    }
    const auto& maps = p.dim == 2 ? planar : spatial;
    for (const auto& N : maps) {
      CAPTURE(name);
      const auto q = transform(p, N, RVec(p.dim, Rational(1, 2)));
      CHECK(danilov_dims(q) == h);
      CHECK(enumerate_faces(q).vertices.size() == enumerate_faces(p).vertices.size());
    }
  }
}

TEST_CASE("three way agreement") {
  for (const auto& name : fixtures::smooth_polytopes()) {
    CAPTURE(name);
    const auto c = cross_check(fixtures::polytope(name));
    CHECK(c.danilov == c.morse_counts);
    CHECK(c.danilov == c.reversed);
    CHECK(c.perfection);
    CHECK(c.degree_halving);
  }
  CHECK(cross_check(fixtures::polytope("square")).danilov == L{1, 2, 1});
}

TEST_CASE("rejected polytopes") {
  CHECK(kind_of([] { enumerate_faces(fixtures::polytope("nonsmooth_triangle")); }) == ErrorKind::NotDelzant);
  // Unbounded quadrant.
  CHECK(kind_of([] { enumerate_faces(DelzantPolytope{2, {Facet{{1, 0}, 0}, Facet{{0, 1}, 0}}}); }) ==
        ErrorKind::NotDelzant);
  // Square pyramid: four facets meet at the apex.
  DelzantPolytope pyramid{3,
                          {Facet{{0, 0, 1}, 0}, Facet{{1, 0, -1}, 1}, Facet{{-1, 0, -1}, 1}, Facet{{0, 1, -1}, 1},
                           Facet{{0, -1, -1}, 1}}};
  CHECK(kind_of([&] { enumerate_faces(pyramid); }) == ErrorKind::NotDelzant);
  CHECK(kind_of([] {
          enumerate_faces(DelzantPolytope{1, {Facet{{2}, 0}, Facet{{-1}, 1}}});
        }) == ErrorKind::NotDelzant);
}
