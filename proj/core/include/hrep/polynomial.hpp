#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hrep/rational.hpp"

namespace hrep {

/// Multivariate polynomial with rational coefficients over variables indexed
/// 0, 1, 2, ... Exponent vectors are stored with trailing zeros trimmed, so
/// polynomials over different variable counts combine without ceremony.
/// Variable names only matter for parsing and printing.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint16_t>;
  using TermMap = std::map<Exponents, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT

  static Polynomial variable(std::size_t index);
  static Polynomial monomial(Exponents exponents, const Rational& coefficient);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exponents) const;

  /// Number of variables actually referenced (max index + 1).
  std::size_t num_vars() const;
  int total_degree() const;
  int degree_in(std::size_t var) const;

  Polynomial partial(std::size_t var) const;
  Polynomial pow(unsigned exponent) const;

  /// Substitutes `values[i]` for variable i. `values` must cover num_vars().
  template <class R>
  R evaluate(std::span<const R> values) const;

  Polynomial substitute(std::span<const Polynomial> values) const { return evaluate<Polynomial>(values); }

  /// Renames variable i to variable `offset + i`.
  Polynomial shifted(std::size_t offset) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

  /// Infix rendering, e.g. `3/2*x0^2*x1 - x1 + 1`.
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void add_term(const Exponents& e, const Rational& c);
  TermMap terms_;
};

/// Default variable names `x0, x1, ...`.
std::vector<std::string> default_variable_names(std::size_t count, std::string_view prefix = "x");

/// Parses the infix grammar `expr := term (('+'|'-') term)*`,
/// `term := factor ('*' factor)*`, `factor := '-' factor | atom ('^' uint)?`,
/// `atom := rational | name | '(' expr ')'`.
/// Names are resolved against `names`; parse errors report the column.
Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names);

/// Partial derivative by variable name. Throws std::invalid_argument for an
/// undeclared name.
Polynomial partial(const Polynomial& p, std::string_view var, std::span<const std::string> names);

class PolynomialParseError : public std::invalid_argument {
 public:
  PolynomialParseError(const std::string& what, std::size_t column)
      : std::invalid_argument(what + " at column " + std::to_string(column)), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

template <class R>
R Polynomial::evaluate(std::span<const R> values) const {
  if (values.size() < num_vars()) {
    throw std::invalid_argument("polynomial evaluation: point has " + std::to_string(values.size()) +
                                " coordinates, polynomial uses " + std::to_string(num_vars()));
  }
  // powers[v][e] = values[v]^e, grown on demand
  std::vector<std::vector<R>> powers(num_vars());
  R result{};
  for (const auto& [exps, coeff] : terms_) {
    R term{coeff};
    for (std::size_t v = 0; v < exps.size(); ++v) {
      const auto e = exps[v];
      if (e == 0) continue;
      auto& table = powers[v];
      if (table.empty()) table.push_back(values[v]);
      while (table.size() < e) table.push_back(table.back() * values[v]);
      term = term * table[e - 1];
    }
    result = result + term;
  }
  return result;
}

}  // namespace hrep
