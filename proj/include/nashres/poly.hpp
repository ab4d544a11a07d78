#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nashres/order.hpp"
#include "nashres/rational.hpp"

namespace nashres {

using Exponents = std::vector<std::uint32_t>;
using Point = std::vector<Rational>;

/// Canonical variable order: x, x1..x9, z, z1..z9, t, then any other name
/// alphabetically. Every variable list held by a MultiPoly is sorted this way.
bool variable_less(const std::string& a, const std::string& b);

/// Sorted union of two variable lists.
std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

std::vector<std::string> sorted_variables(std::vector<std::string> vars);

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are keyed by exponent vectors aligned with variables(). No zero
/// coefficient is ever stored. Iteration order is graded: lower total degree
/// first, lexicographically descending inside a degree, which also fixes the
/// printed form.
class MultiPoly {
 public:
  struct TermLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
  };
  using TermMap = std::map<Exponents, Rational, TermLess>;

  MultiPoly() = default;
  explicit MultiPoly(std::vector<std::string> variables);

  static MultiPoly constant(const Rational& c, std::vector<std::string> variables = {});
  static MultiPoly variable(const std::string& name, std::vector<std::string> variables = {});
  static MultiPoly monomial(std::vector<std::string> variables, Exponents exps, const Rational& c);

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t num_terms() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;

  std::optional<std::size_t> index_of(const std::string& var) const;
  bool has_variable(const std::string& var) const { return index_of(var).has_value(); }
  bool involves(const std::string& var) const;
  /// Variables that occur with a positive exponent in some term.
  std::vector<std::string> support() const;

  /// Total degree; -1 for the zero polynomial.
  std::int64_t total_degree() const;
  /// Lowest total degree of a term: the order at the origin.
  ExtOrder order_at_origin() const;
  std::uint32_t degree_in(const std::string& var) const;
  /// Coefficient of var^k, as a polynomial over the same variable list.
  MultiPoly coefficient_in(const std::string& var, std::uint32_t k) const;
  Rational coefficient(const Exponents& exps) const;
  /// Sum of the terms of the lowest total degree (the initial form at the origin).
  MultiPoly initial_form() const;

  /// Re-embed into a larger variable list (must contain every current variable).
  MultiPoly with_variables(const std::vector<std::string>& vars) const;
  /// Restrict to a smaller list; throws if a dropped variable is used.
  MultiPoly restricted_to(const std::vector<std::string>& vars) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }

  MultiPoly pow(std::uint32_t n) const;

  /// Formal partial derivative. Throws ValidationError for an unknown variable.
  MultiPoly derivative(const std::string& var) const;
  /// g(y) = f(y + p). Throws ValidationError on dimension mismatch.
  MultiPoly translate(const Point& p) const;
  /// Substitute polynomials for some variables; the rest stay symbolic.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& subs) const;
  Rational evaluate(const Point& p) const;

  /// Scaled so that the first term in canonical order has coefficient 1.
  MultiPoly monic() const;

  std::string to_string() const;

  /// Equality after embedding both into the union of their variable lists.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Adds c to the coefficient of exps (removing the term if it cancels).
  void add_term(const Exponents& exps, const Rational& c);

 private:
  std::vector<std::string> vars_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Order of f at p: the order at the origin of f(y + p).
ExtOrder poly_order_at(const MultiPoly& f, const Point& p);
MultiPoly poly_translate(const MultiPoly& f, const Point& p);
MultiPoly poly_derive(const MultiPoly& f, const std::string& var);

/// Canonical ordering used for de-duplicating sets of polynomials.
bool poly_less(const MultiPoly& a, const MultiPoly& b);

}  // namespace nashres
