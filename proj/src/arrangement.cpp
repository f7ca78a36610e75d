#include "realkirwan/arrangement.hpp"

#include "realkirwan/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace realkirwan {

namespace {

// Canonical representative of the line through v: primitive integer vector
// whose first nonzero entry is positive.
RVec line_key(const RVec& v) {
  auto p = primitive_integer_vector(v);
  const auto first = std::find_if(p.begin(), p.end(), [](const Integer& x) { return x != 0; });
  if (first != p.end() && *first < 0) {
    for (auto& x : p) x = -x;
  }
  return to_rvec(p);
}

std::vector<RVec> distinct_hyperplanes(const std::vector<RVec>& normals) {
  std::set<RVec> seen;
  std::vector<RVec> out;
  for (const auto& n : normals) {
    if (is_zero(n)) throw Error(ErrorKind::InvalidArgument, "arrangement normal is zero");
    auto key = line_key(n);
    if (seen.insert(key).second) out.push_back(std::move(key));
  }
  return out;
}

RVec coordinates_in(const RVec& n, const RMatrix& basis) {
  RVec out;
  for (const auto& b : basis) out.push_back(dot(n, b));
  return out;
}

RVec combine(const RVec& coeffs, const RMatrix& basis, std::size_t dim) {
  RVec x(dim, Rational(0));
  for (std::size_t j = 0; j < basis.size(); ++j) x = add(x, scale(basis[j], coeffs[j]));
  return x;
}

std::vector<RVec> chambers_rec(const std::vector<RVec>& hyperplanes, std::size_t dim) {
  if (hyperplanes.empty()) {
    RVec e(dim, Rational(0));
    e[0] = 1;
    return {e};
  }
  const RMatrix span = qla::independent_rows(hyperplanes);
  if (span.size() < dim) {
    std::vector<RVec> local;
    for (const auto& n : hyperplanes) local.push_back(coordinates_in(n, span));
    std::vector<RVec> out;
    for (const auto& y : chambers_rec(distinct_hyperplanes(local), span.size())) out.push_back(combine(y, span, dim));
    return out;
  }
  if (dim == 1) return {RVec{Rational(1)}, RVec{Rational(-1)}};

  // One-dimensional flats: kernels of (dim - 1) independent normals.
  std::set<RVec> lines;
  std::vector<std::size_t> idx(dim - 1);
  std::function<void(std::size_t, std::size_t)> pick = [&](std::size_t pos, std::size_t start) {
    if (pos == idx.size()) {
      RMatrix rows;
      for (auto i : idx) rows.push_back(hyperplanes[i]);
      const auto ns = qla::nullspace(rows, dim);
      if (ns.size() == 1) lines.insert(line_key(ns.front()));
      return;
    }
    for (std::size_t i = start; i < hyperplanes.size(); ++i) {
      idx[pos] = i;
      pick(pos + 1, i + 1);
    }
  };
  pick(0, 0);

  std::map<std::vector<int>, RVec> found;
  for (const auto& line : lines) {
    for (int s : {1, -1}) {
      const RVec ray = scale(line, Rational(s));
      const RMatrix complement = qla::nullspace(RMatrix{ray}, dim);
      std::vector<RVec> local;
      for (const auto& n : hyperplanes) {
        if (dot(n, ray) == 0) local.push_back(coordinates_in(n, complement));
      }
      for (const auto& y : chambers_rec(distinct_hyperplanes(local), dim - 1)) {
        const RVec w = combine(y, complement, dim);
        Rational eps = 1;
        for (const auto& n : hyperplanes) {
          const Rational a = dot(n, ray);
          const Rational b = dot(n, w);
          if (a == 0 || b == 0) continue;
          const Rational bound = boost::multiprecision::abs(a) / (2 * boost::multiprecision::abs(b));
          if (bound < eps) eps = bound;
        }
        RVec rep = add(ray, scale(w, eps));
        auto key = sign_vector(hyperplanes, rep);
        found.emplace(std::move(key), std::move(rep));
      }
    }
  }
  std::vector<RVec> out;
  for (auto& [key, rep] : found) out.push_back(std::move(rep));
  return out;
}

}  // namespace

std::vector<int> sign_vector(const std::vector<RVec>& normals, const RVec& x) {
  std::vector<int> s;
  s.reserve(normals.size());
  for (const auto& n : normals) {
    const Rational v = dot(n, x);
    s.push_back(v > 0 ? 1 : (v < 0 ? -1 : 0));
  }
  return s;
}

std::vector<RVec> central_chambers(const std::vector<RVec>& normals, std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::InvalidArgument, "arrangement dimension must be positive");
  for (const auto& n : normals) {
    if (n.size() != dim) throw Error(ErrorKind::InvalidArgument, "arrangement normal has wrong length");
  }
  std::map<std::vector<int>, RVec> found;
  for (const auto& rep : chambers_rec(distinct_hyperplanes(normals), dim)) {
    RVec primitive = to_rvec(primitive_integer_vector(rep));
    auto key = sign_vector(normals, primitive);
    if (std::find(key.begin(), key.end(), 0) != key.end()) {
      throw Error(ErrorKind::InvalidArgument, "internal: chamber representative lies on a wall");
    }
    found.emplace(std::move(key), std::move(primitive));
  }
  std::vector<RVec> out;
  for (auto& [key, rep] : found) out.push_back(std::move(rep));
  return out;
}

}  // namespace realkirwan
