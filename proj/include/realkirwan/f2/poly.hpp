#pragma once

#include "realkirwan/f2/bitvec.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace realkirwan::f2 {

/// Exponent vector of a monomial in F2[x_1..x_n].
struct Monomial {
  std::vector<unsigned> exponents;

  unsigned degree() const;
  std::size_t nvars() const { return exponents.size(); }

  static Monomial one(std::size_t n) { return Monomial{std::vector<unsigned>(n, 0)}; }
  static Monomial variable(std::size_t n, std::size_t i);

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial&) const = default;
};

/// True when a precedes b in graded-lexicographic order (higher degree first,
/// then lexicographically larger exponent vector first).
bool grlex_before(const Monomial& a, const Monomial& b);

/// All monomials of total degree d in n variables, graded-lex ordered.
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// Monomials whose weighted degree sum(weight * a_i) equals `degree`. With
/// weight 2 this enumerates the complex grading of the same ring.
std::vector<Monomial> weighted_monomial_basis(std::size_t n, unsigned degree, unsigned weight);

/// Ordered monomial basis of one degree with index lookup; the coordinate
/// system for dense polynomial vectors.
class MonomialBasis {
 public:
  MonomialBasis() = default;
  MonomialBasis(std::size_t n, unsigned d);
  explicit MonomialBasis(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  /// Index of m, or npos if m is not in the basis.
  std::size_t index_of(const Monomial& m) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<std::vector<unsigned>, std::size_t> index_;
};

/// Homogeneous polynomial over F2: a degree plus a set of monomials of that
/// degree, stored graded-lex sorted without duplicates.
class F2Poly {
 public:
  F2Poly(std::size_t nvars, unsigned degree) : nvars_(nvars), degree_(degree) {}
  /// Builds from monomials of a common degree; repeated monomials cancel.
  F2Poly(std::size_t nvars, unsigned degree, std::vector<Monomial> terms);

  static F2Poly zero(std::size_t n, unsigned d) { return F2Poly(n, d); }
  static F2Poly one(std::size_t n);
  static F2Poly variable(std::size_t n, std::size_t i);
  /// The linear form sum of x_i over the set bits of `bits`.
  static F2Poly linear_form(std::size_t n, const std::vector<std::uint8_t>& bits);

  std::size_t nvars() const { return nvars_; }
  unsigned degree() const { return degree_; }
  const std::vector<Monomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool contains(const Monomial& m) const;

  BitVec to_dense(const MonomialBasis& basis) const;
  static F2Poly from_dense(const BitVec& v, const MonomialBasis& basis, std::size_t nvars, unsigned degree);

  /// Pretty form, e.g. "x1^2 + x1 x2"; "0" and "1" for constants.
  std::string to_string() const;
  static F2Poly parse(std::string_view text, std::size_t nvars);

  bool operator==(const F2Poly&) const = default;

 private:
  std::size_t nvars_ = 0;
  unsigned degree_ = 0;
  std::vector<Monomial> terms_;
};

/// Sum over F2. Throws Error(DegreeMismatch) when degrees differ.
F2Poly add(const F2Poly& p, const F2Poly& q);
F2Poly mul(const F2Poly& p, const F2Poly& q);

struct DivRem {
  F2Poly quotient;
  F2Poly remainder;
};

/// Division by a nonzero linear form ell. The pivot is the lowest-index
/// variable of ell; the remainder is p with the pivot replaced by the sum of
/// the other variables of ell, so p = ell * quotient + remainder and the
/// remainder is free of the pivot. For constants the quotient is zero of
/// degree 0. Throws Error(InvalidCharacter) for ell = 0 or deg ell != 1.
DivRem divrem_linear(const F2Poly& p, const F2Poly& ell);

struct PowerDivision {
  bool divisible = false;
  /// p / ell^m; present when divisible and deg p >= m.
  std::optional<F2Poly> quotient;
};

/// Whether ell^m divides p, by m successive divrem_linear steps.
PowerDivision divisible_power(const F2Poly& p, const F2Poly& ell, unsigned m);

/// Linear functionals on the degree-d slice whose common kernel is the set
/// of g with ell^m | g. They are the coefficients of the successive
/// remainders of g under m divisions by ell; zero functionals are dropped.
std::vector<BitVec> divisibility_functionals(const F2Poly& ell, unsigned m, const MonomialBasis& basis,
                                             unsigned d);

}  // namespace realkirwan::f2
