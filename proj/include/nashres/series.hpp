#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "nashres/order.hpp"
#include "nashres/poly.hpp"
#include "nashres/rational.hpp"

namespace nashres {

/// Truncated univariate power series in t.
///
/// A finite precision N means the coefficients of t^0..t^(N-1) are known and
/// nothing is claimed beyond; an exact series is a polynomial known entirely.
/// Stored coefficients never reach index N and carry no trailing zeros.
class PowerSeries {
 public:
  PowerSeries() = default;

  static PowerSeries exact(std::vector<Rational> coeffs);
  static PowerSeries truncated(std::vector<Rational> coeffs, std::size_t precision);
  static PowerSeries monomial(const Rational& c, std::size_t k,
                              std::optional<std::size_t> precision = std::nullopt);
  static PowerSeries t() { return monomial(Rational(1), 1); }
  /// A polynomial in the single variable `var` (or a constant).
  static PowerSeries from_poly(const MultiPoly& p, std::optional<std::size_t> precision,
                               const std::string& var = "t");

  bool is_exact() const noexcept { return !precision_.has_value(); }
  const std::optional<std::size_t>& precision() const noexcept { return precision_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  /// Coefficient of t^k; throws PrecisionError at or beyond the precision.
  Rational coefficient(std::size_t k) const;
  bool is_exact_zero() const { return is_exact() && coeffs_.empty(); }

  ExtOrder order() const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& c, const PowerSeries& a);
  PowerSeries& operator+=(const PowerSeries& o) { return *this = *this + o; }
  PowerSeries& operator*=(const PowerSeries& o) { return *this = *this * o; }

  PowerSeries pow(std::uint32_t n) const;

  /// Multiply by t^k; precision grows by k.
  PowerSeries shifted(std::size_t k) const;
  /// Divide by t^k; the low coefficients must be zero. Precision drops by k.
  PowerSeries divided_by_t(std::size_t k) const;
  /// t -> t^e: coefficient of t^(ek) is the old t^k coefficient; precision times e.
  PowerSeries reparametrized(std::size_t e) const;
  /// Composition s(h(t)) with ord(h) >= 1.
  PowerSeries compose(const PowerSeries& h) const;
  /// Multiplicative inverse of a unit (nonzero constant term), known to
  /// O(t^n) or to the series' own precision if smaller.
  PowerSeries inverse(std::size_t n) const;
  /// Forget everything from t^n on.
  PowerSeries truncated_to(std::size_t n) const;

  MultiPoly to_poly(const std::string& var = "t") const;
  /// "t^3 + t^5 + O(t^16)"; exact series have no O-term.
  std::string to_string() const;

  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

 private:
  PowerSeries(std::vector<Rational> coeffs, std::optional<std::size_t> precision);
  void normalize();

  std::vector<Rational> coeffs_;
  std::optional<std::size_t> precision_;
};

std::ostream& operator<<(std::ostream& os, const PowerSeries& s);

/// Smaller of two precisions (nullopt means exact).
std::optional<std::size_t> min_precision(const std::optional<std::size_t>& a,
                                         const std::optional<std::size_t>& b);

ExtOrder series_order(const PowerSeries& s);
PowerSeries series_reparametrize(const PowerSeries& s, std::size_t e);

/// phi(f): substitute a series for every variable of f. Missing substitutes
/// raise ValidationError. The result precision is the minimum over the
/// substitutes that actually occur in f.
PowerSeries poly_compose_series(const MultiPoly& f, const std::map<std::string, PowerSeries>& subs);

}  // namespace nashres
