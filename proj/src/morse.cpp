#include "realkirwan/morse.hpp"

#include "realkirwan/errors.hpp"
#include "realkirwan/gkm_module.hpp"

#include <algorithm>

namespace realkirwan {

namespace {

long binomial(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<unsigned> IndexTable::multiset() const {
  auto s = lambda;
  std::sort(s.begin(), s.end());
  return s;
}

Direction generic_direction(const MomentGraph& g) {
  Integer bound = 0;
  for (const auto& e : g.edges()) {
    const auto diff = sub(g.vertices()[e.v].phi, g.vertices()[e.u].phi);
    for (const auto& x : primitive_integer_vector(diff)) bound = std::max(bound, Integer(boost::multiprecision::abs(x)));
  }
  const Integer base = bound + 1;
  Direction xi;
  Integer power = 1;
  for (std::size_t i = 0; i < g.n_phi(); ++i) {
    xi.emplace_back(power);
    power *= base;
  }
  // Only an edge whose endpoints share a moment image can defeat this choice.
  if (!is_generic(g, xi)) throw Error(ErrorKind::NonGenericDirection, "an edge has coincident endpoint moment images");
  return xi;
}

bool is_generic(const MomentGraph& g, const Direction& xi) {
  for (const auto& e : g.edges()) {
    if (dot(sub(g.vertices()[e.v].phi, g.vertices()[e.u].phi), xi) == 0) return false;
  }
  return true;
}

IndexTable morse_indices(const MomentGraph& g, const Direction& xi) {
  if (xi.size() != g.n_phi()) throw Error(ErrorKind::InvalidArgument, "direction has wrong length");
  IndexTable table;
  table.lambda.assign(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    const Rational s = dot(sub(g.vertices()[e.v].phi, g.vertices()[e.u].phi), xi);
    if (s == 0) {
      throw Error(ErrorKind::NonGenericDirection, "edge " + std::to_string(i) + " (" + g.vertices()[e.u].id + ", " +
                                                      g.vertices()[e.v].id + ") is orthogonal to xi");
    }
    // The endpoint higher up in xi sees the edge going down.
    table.lambda[s < 0 ? e.u : e.v] += e.multiplicity;
  }
  return table;
}

std::vector<long> morse_series(const IndexTable& table, std::size_t n, unsigned up_to) {
  std::vector<long> out(up_to + 1, 0);
  const long k = static_cast<long>(n) - 1;
  for (auto l : table.lambda) {
    for (unsigned d = l; d <= up_to; ++d) out[d] += binomial(static_cast<long>(d - l) + k, k);
  }
  return out;
}

PerfectionResult perfection_check(const MomentGraph& g, unsigned up_to, std::optional<Direction> xi) {
  require_accepted(g);
  PerfectionResult r;
  r.xi = xi ? *xi : generic_direction(g);
  r.indices = morse_indices(g, r.xi);
  r.module_dims = poincare_series(g, up_to);
  r.morse_dims = morse_series(r.indices, g.n(), up_to);
  r.ok = r.module_dims == r.morse_dims;
  return r;
}

}  // namespace realkirwan
