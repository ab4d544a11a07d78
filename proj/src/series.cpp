#include "nashres/series.hpp"

#include <algorithm>
#include <sstream>

#include "nashres/error.hpp"

namespace nashres {

namespace {

// Product of coefficient lists, keeping only indices below limit (if given).
std::vector<Rational> mul_coeffs(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                 std::optional<std::size_t> limit) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size() + b.size() - 1;
  if (limit) n = std::min(n, *limit);
  std::vector<Rational> out(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

std::optional<std::size_t> min_precision(const std::optional<std::size_t>& a,
                                         const std::optional<std::size_t>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::optional<std::size_t> precision)
    : coeffs_(std::move(coeffs)), precision_(precision) {
  normalize();
}

void PowerSeries::normalize() {
  if (precision_ && coeffs_.size() > *precision_) coeffs_.resize(*precision_);
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PowerSeries PowerSeries::exact(std::vector<Rational> coeffs) {
  return PowerSeries(std::move(coeffs), std::nullopt);
}

PowerSeries PowerSeries::truncated(std::vector<Rational> coeffs, std::size_t precision) {
  return PowerSeries(std::move(coeffs), precision);
}

PowerSeries PowerSeries::monomial(const Rational& c, std::size_t k,
                                  std::optional<std::size_t> precision) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return PowerSeries(std::move(v), precision);
}

PowerSeries PowerSeries::from_poly(const MultiPoly& p, std::optional<std::size_t> precision,
                                   const std::string& var) {
  for (const auto& v : p.support())
    if (v != var) throw ValidationError("series expression uses variable " + v + ", expected " + var);
  std::vector<Rational> coeffs;
  auto idx = p.index_of(var);
  for (const auto& [e, c] : p.terms()) {
    const std::size_t k = idx ? e[*idx] : 0;
    if (coeffs.size() <= k) coeffs.resize(k + 1);
    coeffs[k] += c;
  }
  return PowerSeries(std::move(coeffs), precision);
}

Rational PowerSeries::coefficient(std::size_t k) const {
  if (precision_ && k >= *precision_)
    throw PrecisionError("coefficient of t^" + std::to_string(k) + " requested from a series known to O(t^" +
                         std::to_string(*precision_) + ")");
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

ExtOrder PowerSeries::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return ExtOrder::exact(i);
  if (precision_) return ExtOrder::at_least(*precision_);
  return ExtOrder::infinite();
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] += b.coeffs_[i];
  return PowerSeries(std::move(out), min_precision(a.precision_, b.precision_));
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  auto prec = min_precision(a.precision_, b.precision_);
  return PowerSeries(mul_coeffs(a.coeffs_, b.coeffs_, prec), prec);
}

PowerSeries operator*(const Rational& c, const PowerSeries& a) {
  PowerSeries out(a);
  for (auto& x : out.coeffs_) x *= c;
  out.normalize();
  return out;
}

PowerSeries PowerSeries::pow(std::uint32_t n) const {
  PowerSeries out = PowerSeries::exact({Rational(1)});
  if (n == 0) return out;
  out.precision_ = precision_;
  PowerSeries base = *this;
  while (n) {
    if (n & 1u) out = out * base;
    n >>= 1u;
    if (n) base = base * base;
  }
  return out;
}

PowerSeries PowerSeries::shifted(std::size_t k) const {
  std::vector<Rational> out(k, Rational(0));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  std::optional<std::size_t> prec;
  if (precision_) prec = *precision_ + k;
  return PowerSeries(std::move(out), prec);
}

PowerSeries PowerSeries::divided_by_t(std::size_t k) const {
  if (precision_ && *precision_ < k)
    throw PrecisionError("cannot divide by t^" + std::to_string(k) + " a series known to O(t^" +
                         std::to_string(*precision_) + ")");
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) throw ValidationError("series is not divisible by t^" + std::to_string(k));
  std::vector<Rational> out;
  if (coeffs_.size() > k) out.assign(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end());
  std::optional<std::size_t> prec;
  if (precision_) prec = *precision_ - k;
  return PowerSeries(std::move(out), prec);
}

PowerSeries PowerSeries::reparametrized(std::size_t e) const {
  if (e == 0) throw ValidationError("reparametrization exponent must be positive");
  if (e == 1) return *this;
  std::vector<Rational> out(coeffs_.empty() ? 0 : (coeffs_.size() - 1) * e + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * e] = coeffs_[i];
  std::optional<std::size_t> prec;
  if (precision_) prec = *precision_ * e;
  return PowerSeries(std::move(out), prec);
}

PowerSeries PowerSeries::compose(const PowerSeries& h) const {
  const ExtOrder oh = h.order();
  if (oh.is_exact() && oh.value() == 0)
    throw ValidationError("inner series of a composition must have positive order");
  std::size_t low = 1;
  if (!oh.is_infinite()) low = std::max<std::size_t>(1, oh.value());

  std::optional<std::size_t> prec;
  if (precision_) prec = *precision_ * low;
  if (coeffs_.size() > 1 || precision_) prec = min_precision(prec, h.precision_);

  std::vector<Rational> acc;
  std::vector<Rational> hp{Rational(1)};
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k > 0) hp = mul_coeffs(hp, h.coeffs_, prec);
    if (coeffs_[k] == 0) continue;
    if (acc.size() < hp.size()) acc.resize(hp.size());
    for (std::size_t i = 0; i < hp.size(); ++i) acc[i] += coeffs_[k] * hp[i];
  }
  return PowerSeries(std::move(acc), prec);
}

PowerSeries PowerSeries::inverse(std::size_t n) const {
  if (coeffs_.empty() || coeffs_[0] == 0) throw ValidationError("series is not invertible");
  const std::size_t m = precision_ ? std::min(n, *precision_) : n;
  std::vector<Rational> out(m);
  const Rational inv0 = 1 / coeffs_[0];
  for (std::size_t k = 0; k < m; ++k) {
    Rational acc = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k && j < coeffs_.size(); ++j) acc -= coeffs_[j] * out[k - j];
    out[k] = acc * inv0;
  }
  return PowerSeries(std::move(out), m);
}

PowerSeries PowerSeries::truncated_to(std::size_t n) const {
  return PowerSeries(coeffs_, min_precision(precision_, n));
}

MultiPoly PowerSeries::to_poly(const std::string& var) const {
  MultiPoly out(std::vector<std::string>{var});
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    out.add_term(Exponents{static_cast<std::uint32_t>(i)}, coeffs_[i]);
  return out;
}

std::string PowerSeries::to_string() const {
  std::string body = to_poly().to_string();
  if (!precision_) return body;
  std::string tail = "O(t^" + std::to_string(*precision_) + ")";
  if (coeffs_.empty()) return tail;
  return body + " + " + tail;
}

std::ostream& operator<<(std::ostream& os, const PowerSeries& s) { return os << s.to_string(); }

ExtOrder series_order(const PowerSeries& s) { return s.order(); }

PowerSeries series_reparametrize(const PowerSeries& s, std::size_t e) { return s.reparametrized(e); }

PowerSeries poly_compose_series(const MultiPoly& f, const std::map<std::string, PowerSeries>& subs) {
  const auto& vars = f.variables();
  std::vector<const PowerSeries*> image(vars.size(), nullptr);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    auto it = subs.find(vars[i]);
    if (it == subs.end()) {
      if (f.involves(vars[i])) throw ValidationError("no substitute given for variable " + vars[i]);
      continue;
    }
    image[i] = &it->second;
  }

  std::optional<std::size_t> prec;
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (image[i] && f.involves(vars[i])) prec = min_precision(prec, image[i]->precision());

  std::vector<std::vector<PowerSeries>> powers(vars.size());
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!image[i]) continue;
    const std::uint32_t deg = f.degree_in(vars[i]);
    powers[i].push_back(PowerSeries::exact({Rational(1)}));
    PowerSeries base = prec ? image[i]->truncated_to(*prec) : *image[i];
    for (std::uint32_t k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * base);
  }

  std::vector<Rational> acc;
  for (const auto& [e, c] : f.terms()) {
    PowerSeries term = PowerSeries::exact({c});
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = term * powers[i][e[i]];
    const auto& tc = term.coefficients();
    if (acc.size() < tc.size()) acc.resize(tc.size());
    for (std::size_t k = 0; k < tc.size(); ++k) acc[k] += tc[k];
  }
  return prec ? PowerSeries::truncated(std::move(acc), *prec) : PowerSeries::exact(std::move(acc));
}

}  // namespace nashres
