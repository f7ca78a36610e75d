#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace realkirwan {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RVec = std::vector<Rational>;
using RMatrix = std::vector<RVec>;

/// Parses "p/q", "p" or "-p/q". Throws Error(ParseError) on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p" for integers and "p/q" otherwise, in lowest terms.
std::string format_rational(const Rational& r);

/// Parses a comma-separated list such as "1/3,1/3".
RVec parse_rational_list(std::string_view text);
std::string format_rational_list(const RVec& v);

Rational dot(const RVec& a, const RVec& b);
RVec sub(const RVec& a, const RVec& b);
RVec add(const RVec& a, const RVec& b);
RVec scale(const RVec& a, const Rational& s);
bool is_zero(const RVec& v);

/// Positive multiple of v with coprime integer entries (v must be nonzero).
std::vector<Integer> primitive_integer_vector(const RVec& v);
RVec to_rvec(const std::vector<Integer>& v);

namespace qla {

std::size_t rank(RMatrix rows);

/// Basis of { x : rows * x = 0 } in R^ncols.
RMatrix nullspace(RMatrix rows, std::size_t ncols);

/// Linearly independent subset of rows spanning the same space (first-come).
RMatrix independent_rows(const RMatrix& rows);

/// Solves a square system; nullopt if singular.
std::optional<RVec> solve(RMatrix a, RVec b);

Rational determinant(RMatrix a);

}  // namespace qla

}  // namespace realkirwan
