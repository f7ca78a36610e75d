#include "realkirwan/f2/poly.hpp"

#include "realkirwan/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace realkirwan::f2 {

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto e : exponents) d += e;
  return d;
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  Monomial m = one(n);
  m.exponents[i] = 1;
  return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m = a;
  for (std::size_t i = 0; i < m.exponents.size(); ++i) m.exponents[i] += b.exponents[i];
  return m;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  return a.exponents > b.exponents;
}

namespace {

void enumerate(std::size_t var, unsigned remaining, std::vector<unsigned>& cur, unsigned weight,
               std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    if (remaining % weight == 0) {
      cur[var] = remaining / weight;
      out.push_back(Monomial{cur});
    }
    return;
  }
  for (int e = static_cast<int>(remaining / weight); e >= 0; --e) {
    cur[var] = static_cast<unsigned>(e);
    enumerate(var + 1, remaining - static_cast<unsigned>(e) * weight, cur, weight, out);
  }
  cur[var] = 0;
}

void sort_terms(std::vector<Monomial>& terms) { std::sort(terms.begin(), terms.end(), grlex_before); }

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) { return weighted_monomial_basis(n, d, 1); }

std::vector<Monomial> weighted_monomial_basis(std::size_t n, unsigned degree, unsigned weight) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "monomial basis needs at least one variable");
  std::vector<Monomial> out;
  std::vector<unsigned> cur(n, 0);
  enumerate(0, degree, cur, weight, out);
  return out;
}

MonomialBasis::MonomialBasis(std::size_t n, unsigned d) : MonomialBasis(monomial_basis(n, d)) {}

MonomialBasis::MonomialBasis(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i].exponents, i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  const auto it = index_.find(m.exponents);
  return it == index_.end() ? BitVec::npos : it->second;
}

F2Poly::F2Poly(std::size_t nvars, unsigned degree, std::vector<Monomial> terms) : nvars_(nvars), degree_(degree) {
  for (const auto& t : terms) {
    if (t.nvars() != nvars || t.degree() != degree) {
      throw Error(ErrorKind::DegreeMismatch, "monomial does not match polynomial degree or arity");
    }
  }
  sort_terms(terms);
  // Equal monomials are adjacent after sorting; pairs cancel over F2.
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) terms_.push_back(terms[i]);
    i = j;
  }
}

F2Poly F2Poly::one(std::size_t n) { return F2Poly(n, 0, {Monomial::one(n)}); }

F2Poly F2Poly::variable(std::size_t n, std::size_t i) { return F2Poly(n, 1, {Monomial::variable(n, i)}); }

F2Poly F2Poly::linear_form(std::size_t n, const std::vector<std::uint8_t>& bits) {
  std::vector<Monomial> terms;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] & 1u) terms.push_back(Monomial::variable(n, i));
  }
  return F2Poly(n, 1, std::move(terms));
}

bool F2Poly::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m, grlex_before);
}

BitVec F2Poly::to_dense(const MonomialBasis& basis) const {
  BitVec v(basis.size());
  for (const auto& t : terms_) {
    const auto i = basis.index_of(t);
    if (i == BitVec::npos) throw Error(ErrorKind::DegreeMismatch, "monomial outside basis");
    v.set(i);
  }
  return v;
}

F2Poly F2Poly::from_dense(const BitVec& v, const MonomialBasis& basis, std::size_t nvars, unsigned degree) {
  std::vector<Monomial> terms;
  for (std::size_t i = v.find_first(); i != BitVec::npos; i = v.find_next(i + 1)) terms.push_back(basis[i]);
  return F2Poly(nvars, degree, std::move(terms));
}

std::string F2Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    if (k) s += " + ";
    std::string term;
    for (std::size_t i = 0; i < nvars_; ++i) {
      const auto e = terms_[k].exponents[i];
      if (e == 0) continue;
      if (!term.empty()) term += " ";
      term += "x" + std::to_string(i + 1);
      if (e > 1) term += "^" + std::to_string(e);
    }
    s += term.empty() ? "1" : term;
  }
  return s;
}

F2Poly F2Poly::parse(std::string_view text, std::size_t nvars) {
  std::vector<Monomial> terms;
  std::optional<unsigned> degree;
  bool saw_zero = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto plus = text.find('+', start);
    std::string_view piece = text.substr(start, plus == std::string_view::npos ? text.npos : plus - start);
    Monomial m = Monomial::one(nvars);
    std::size_t i = 0;
    bool any_factor = false;
    bool constant_one = false;
    while (i < piece.size()) {
      const char c = piece[i];
      if (std::isspace(static_cast<unsigned char>(c)) || c == '*') {
        ++i;
      } else if (c == 'x') {
        std::size_t j = i + 1;
        unsigned var = 0;
        while (j < piece.size() && std::isdigit(static_cast<unsigned char>(piece[j]))) var = var * 10 + (piece[j++] - '0');
        if (j == i + 1 || var == 0 || var > nvars) {
          throw Error(ErrorKind::ParseError, "bad variable in '" + std::string(piece) + "'");
        }
        unsigned e = 1;
        if (j < piece.size() && piece[j] == '^') {
          std::size_t k = j + 1;
          e = 0;
          while (k < piece.size() && std::isdigit(static_cast<unsigned char>(piece[k]))) e = e * 10 + (piece[k++] - '0');
          if (k == j + 1) throw Error(ErrorKind::ParseError, "bad exponent in '" + std::string(piece) + "'");
          j = k;
        }
        m.exponents[var - 1] += e;
        any_factor = true;
        i = j;
      } else if (c == '1' && !any_factor) {
        constant_one = true;
        ++i;
      } else if (c == '0' && !any_factor) {
        saw_zero = true;
        ++i;
      } else {
        throw Error(ErrorKind::ParseError, "unexpected character in polynomial '" + std::string(text) + "'");
      }
    }
    if (any_factor || constant_one) {
      if (degree && *degree != m.degree()) throw Error(ErrorKind::DegreeMismatch, "inhomogeneous polynomial");
      degree = m.degree();
      terms.push_back(m);
    } else if (!saw_zero) {
      throw Error(ErrorKind::ParseError, "empty term in '" + std::string(text) + "'");
    }
    if (plus == std::string_view::npos) break;
    start = plus + 1;
  }
  return F2Poly(nvars, degree.value_or(0), std::move(terms));
}

F2Poly add(const F2Poly& p, const F2Poly& q) {
  if (p.degree() != q.degree() || p.nvars() != q.nvars()) {
    throw Error(ErrorKind::DegreeMismatch,
                "cannot add degree " + std::to_string(p.degree()) + " and degree " + std::to_string(q.degree()));
  }
  std::vector<Monomial> terms;
  std::set_symmetric_difference(p.terms().begin(), p.terms().end(), q.terms().begin(), q.terms().end(),
                                std::back_inserter(terms), grlex_before);
  return F2Poly(p.nvars(), p.degree(), std::move(terms));
}

F2Poly mul(const F2Poly& p, const F2Poly& q) {
  if (p.nvars() != q.nvars()) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  std::vector<Monomial> terms;
  terms.reserve(p.terms().size() * q.terms().size());
  for (const auto& a : p.terms()) {
    for (const auto& b : q.terms()) terms.push_back(a * b);
  }
  return F2Poly(p.nvars(), p.degree() + q.degree(), std::move(terms));
}

DivRem divrem_linear(const F2Poly& p, const F2Poly& ell) {
  if (ell.degree() != 1 || ell.is_zero()) throw Error(ErrorKind::InvalidCharacter, "divisor must be a nonzero linear form");
  if (ell.nvars() != p.nvars()) throw Error(ErrorKind::InvalidArgument, "variable count mismatch");
  const std::size_t n = p.nvars();
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i) {
    if (ell.contains(Monomial::variable(n, i))) vars.push_back(i);
  }
  const std::size_t pivot = vars.front();

  std::set<Monomial> work(p.terms().begin(), p.terms().end());
  std::set<Monomial> quot;
  auto toggle = [](std::set<Monomial>& s, const Monomial& m) {
    if (!s.erase(m)) s.insert(m);
  };
  while (true) {
    const Monomial* top = nullptr;
    for (const auto& m : work) {
      if (m.exponents[pivot] > 0 && (!top || m.exponents[pivot] > top->exponents[pivot])) top = &m;
    }
    if (!top) break;
    Monomial t = *top;
    t.exponents[pivot] -= 1;
    toggle(quot, t);
    for (auto v : vars) {
      Monomial tv = t;
      tv.exponents[v] += 1;
      toggle(work, tv);
    }
  }
  const unsigned qdeg = p.degree() == 0 ? 0 : p.degree() - 1;
  return DivRem{F2Poly(n, qdeg, {quot.begin(), quot.end()}), F2Poly(n, p.degree(), {work.begin(), work.end()})};
}

PowerDivision divisible_power(const F2Poly& p, const F2Poly& ell, unsigned m) {
  if (ell.degree() != 1 || ell.is_zero()) throw Error(ErrorKind::InvalidCharacter, "divisor must be a nonzero linear form");
  if (p.is_zero()) {
    PowerDivision out{true, std::nullopt};
    if (p.degree() >= m) out.quotient = F2Poly::zero(p.nvars(), p.degree() - m);
    return out;
  }
  if (p.degree() < m) return {false, std::nullopt};
  F2Poly g = p;
  for (unsigned j = 0; j < m; ++j) {
    auto dr = divrem_linear(g, ell);
    if (!dr.remainder.is_zero()) return {false, std::nullopt};
    g = std::move(dr.quotient);
  }
  return {true, std::move(g)};
}

std::vector<BitVec> divisibility_functionals(const F2Poly& ell, unsigned m, const MonomialBasis& basis, unsigned d) {
  const std::size_t n = ell.nvars();
  // Output coordinates: remainder j lives in the degree (d - j) slice.
  std::vector<MonomialBasis> out_bases;
  std::vector<std::size_t> offsets;
  std::size_t total = 0;
  for (unsigned j = 0; j < m && j <= d; ++j) {
    out_bases.emplace_back(n, d - j);
    offsets.push_back(total);
    total += out_bases.back().size();
  }

  std::vector<BitVec> columns;
  columns.reserve(basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a) {
    BitVec col(total);
    F2Poly g(n, d, {basis[a]});
    for (std::size_t j = 0; j < out_bases.size(); ++j) {
      auto dr = divrem_linear(g, ell);
      for (const auto& t : dr.remainder.terms()) col.set(offsets[j] + out_bases[j].index_of(t));
      if (g.degree() == 0) break;
      g = std::move(dr.quotient);
    }
    columns.push_back(std::move(col));
  }

  std::vector<BitVec> functionals;
  for (std::size_t r = 0; r < total; ++r) {
    BitVec f(basis.size());
    for (std::size_t a = 0; a < basis.size(); ++a) {
      if (columns[a].test(r)) f.set(a);
    }
    if (f.any()) functionals.push_back(std::move(f));
  }
  return functionals;
}

}  // namespace realkirwan::f2
