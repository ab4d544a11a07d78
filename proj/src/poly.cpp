#include "nashres/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

#include "nashres/error.hpp"

namespace nashres {

namespace {

// (group, index, name): x-family, z-family, t, everything else.
std::tuple<int, long, std::string> variable_rank(const std::string& v) {
  auto family = [&](char c) -> std::optional<long> {
    if (v.empty() || v[0] != c) return std::nullopt;
    if (v.size() == 1) return 0;
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] < '0' || v[i] > '9') return std::nullopt;
    if (v.size() > 10) return std::nullopt;
    return std::stol(v.substr(1));
  };
  if (auto i = family('x')) return {0, *i, ""};
  if (auto i = family('z')) return {1, *i, ""};
  if (v == "t") return {2, 0, ""};
  return {3, 0, v};
}

std::uint32_t degree_of(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

Rational binomial(std::uint32_t n, std::uint32_t k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(out);
}

Rational rational_pow(const Rational& base, std::uint32_t n) {
  Rational out(1);
  Rational b = base;
  while (n) {
    if (n & 1u) out *= b;
    n >>= 1u;
    if (n) b *= b;
  }
  return out;
}

}  // namespace

bool variable_less(const std::string& a, const std::string& b) {
  return variable_rank(a) < variable_rank(b);
}

std::vector<std::string> sorted_variables(std::vector<std::string> vars) {
  std::sort(vars.begin(), vars.end(), variable_less);
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
  std::vector<std::string> all(a);
  all.insert(all.end(), b.begin(), b.end());
  return sorted_variables(std::move(all));
}

bool MultiPoly::TermLess::operator()(const Exponents& a, const Exponents& b) const {
  const auto da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  return b < a;
}

MultiPoly::MultiPoly(std::vector<std::string> variables)
    : vars_(sorted_variables(std::move(variables))) {}

MultiPoly MultiPoly::constant(const Rational& c, std::vector<std::string> variables) {
  MultiPoly p(std::move(variables));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name, std::vector<std::string> variables) {
  variables.push_back(name);
  MultiPoly p(std::move(variables));
  Exponents e(p.vars_.size(), 0);
  e[*p.index_of(name)] = 1;
  p.add_term(e, Rational(1));
  return p;
}

MultiPoly MultiPoly::monomial(std::vector<std::string> variables, Exponents exps,
                              const Rational& c) {
  if (variables.size() != exps.size())
    throw ValidationError("monomial: exponent vector does not match variable list");
  std::vector<std::pair<std::string, std::uint32_t>> pairs;
  for (std::size_t i = 0; i < variables.size(); ++i) pairs.emplace_back(variables[i], exps[i]);
  MultiPoly p(variables);
  if (p.vars_.size() != variables.size())
    throw ValidationError("monomial: repeated variable");
  Exponents e(p.vars_.size(), 0);
  for (const auto& [v, k] : pairs) e[*p.index_of(v)] = k;
  p.add_term(e, c);
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && degree_of(terms_.begin()->first) == 0);
}

std::optional<std::size_t> MultiPoly::index_of(const std::string& var) const {
  auto it = std::find(vars_.begin(), vars_.end(), var);
  if (it == vars_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::involves(const std::string& var) const {
  auto i = index_of(var);
  if (!i) return false;
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const auto& kv) { return kv.first[*i] > 0; });
}

std::vector<std::string> MultiPoly::support() const {
  std::vector<std::string> out;
  for (const auto& v : vars_)
    if (involves(v)) out.push_back(v);
  return out;
}

std::int64_t MultiPoly::total_degree() const {
  if (terms_.empty()) return -1;
  return degree_of(terms_.rbegin()->first);
}

ExtOrder MultiPoly::order_at_origin() const {
  if (terms_.empty()) return ExtOrder::infinite();
  return ExtOrder::exact(degree_of(terms_.begin()->first));
}

std::uint32_t MultiPoly::degree_in(const std::string& var) const {
  auto i = index_of(var);
  if (!i) return 0;
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[*i]);
  return d;
}

MultiPoly MultiPoly::coefficient_in(const std::string& var, std::uint32_t k) const {
  MultiPoly out(vars_);
  auto i = index_of(var);
  if (!i) {
    if (k == 0) return *this;
    return out;
  }
  for (const auto& [e, c] : terms_) {
    if (e[*i] != k) continue;
    Exponents f = e;
    f[*i] = 0;
    out.add_term(f, c);
  }
  return out;
}

Rational MultiPoly::coefficient(const Exponents& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

MultiPoly MultiPoly::initial_form() const {
  MultiPoly out(vars_);
  if (terms_.empty()) return out;
  const auto low = degree_of(terms_.begin()->first);
  for (const auto& [e, c] : terms_) {
    if (degree_of(e) != low) break;
    out.terms_.emplace(e, c);
  }
  return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
  MultiPoly out(vars);
  if (out.vars_ == vars_) {
    out.terms_ = terms_;
    return out;
  }
  std::vector<std::size_t> map(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto j = out.index_of(vars_[i]);
    if (!j) throw ValidationError("variable " + vars_[i] + " missing from target variable list");
    map[i] = *j;
  }
  for (const auto& [e, c] : terms_) {
    Exponents f(out.vars_.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) f[map[i]] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

MultiPoly MultiPoly::restricted_to(const std::vector<std::string>& vars) const {
  MultiPoly out(vars);
  for (const auto& v : vars_)
    if (!out.index_of(v) && involves(v))
      throw ValidationError("polynomial depends on variable " + v);
  for (const auto& [e, c] : terms_) {
    Exponents f(out.vars_.size(), 0);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (auto j = out.index_of(vars_[i])) f[*j] = e[i];
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
  if (exps.size() != vars_.size())
    throw ValidationError("exponent vector length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(*this);
  for (auto& kv : out.terms_) kv.second = -kv.second;
  return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (vars_ != o.vars_) {
    auto vars = merge_variables(vars_, o.vars_);
    *this = with_variables(vars);
    MultiPoly rhs = o.with_variables(vars);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
  }
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_) {
    auto vars = merge_variables(a.vars_, b.vars_);
    return a.with_variables(vars) * b.with_variables(vars);
  }
  MultiPoly out(a.vars_);
  Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

MultiPoly MultiPoly::pow(std::uint32_t n) const {
  MultiPoly out = constant(Rational(1), vars_);
  MultiPoly base = *this;
  while (n) {
    if (n & 1u) out *= base;
    n >>= 1u;
    if (n) base *= base;
  }
  return out;
}

MultiPoly MultiPoly::derivative(const std::string& var) const {
  auto i = index_of(var);
  MultiPoly out(vars_);
  if (!i) return out;
  for (const auto& [e, c] : terms_) {
    if (e[*i] == 0) continue;
    Exponents f = e;
    f[*i] -= 1;
    out.add_term(f, c * e[*i]);
  }
  return out;
}

MultiPoly MultiPoly::translate(const Point& p) const {
  if (p.size() != vars_.size())
    throw ValidationError("point has " + std::to_string(p.size()) + " coordinates, polynomial has " +
                          std::to_string(vars_.size()) + " variables");
  MultiPoly cur = *this;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    MultiPoly next(vars_);
    for (const auto& [e, c] : cur.terms_) {
      const std::uint32_t n = e[i];
      Exponents f = e;
      for (std::uint32_t k = 0; k <= n; ++k) {
        f[i] = k;
        next.add_term(f, c * binomial(n, k) * rational_pow(p[i], n - k));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& subs) const {
  std::vector<std::string> kept;
  std::vector<std::string> result_vars;
  std::vector<const MultiPoly*> image(vars_.size(), nullptr);
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    auto it = subs.find(vars_[i]);
    if (it == subs.end()) {
      result_vars.push_back(vars_[i]);
    } else {
      image[i] = &it->second;
      result_vars.insert(result_vars.end(), it->second.variables().begin(),
                         it->second.variables().end());
    }
  }
  result_vars = sorted_variables(std::move(result_vars));

  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const std::uint32_t deg = degree_in(vars_[i]);
    MultiPoly base = image[i] ? image[i]->with_variables(result_vars)
                              : MultiPoly::variable(vars_[i], result_vars);
    powers[i].reserve(deg + 1);
    powers[i].push_back(constant(Rational(1), result_vars));
    for (std::uint32_t k = 1; k <= deg; ++k) powers[i].push_back(powers[i].back() * base);
  }

  MultiPoly out(result_vars);
  for (const auto& [e, c] : terms_) {
    MultiPoly term = constant(c, result_vars);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= powers[i][e[i]];
    out += term;
  }
  return out;
}

Rational MultiPoly::evaluate(const Point& p) const {
  if (p.size() != vars_.size())
    throw ValidationError("point dimension does not match polynomial variables");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational v = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i]) v *= rational_pow(p[i], e[i]);
    sum += v;
  }
  return sum;
}

MultiPoly MultiPoly::monic() const {
  if (terms_.empty()) return *this;
  MultiPoly out(*this);
  const Rational lead = terms_.begin()->second;
  for (auto& kv : out.terms_) kv.second /= lead;
  return out;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      factors.push_back(e[i] == 1 ? vars_[i] : vars_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    for (std::size_t k = 0; k < factors.size(); ++k) os << (k ? "*" : "") << factors[k];
  }
  return os.str();
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ == b.vars_) return a.terms_ == b.terms_;
  auto vars = merge_variables(a.vars_, b.vars_);
  return a.with_variables(vars).terms_ == b.with_variables(vars).terms_;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.to_string(); }

ExtOrder poly_order_at(const MultiPoly& f, const Point& p) {
  return f.translate(p).order_at_origin();
}

MultiPoly poly_translate(const MultiPoly& f, const Point& p) { return f.translate(p); }

MultiPoly poly_derive(const MultiPoly& f, const std::string& var) { return f.derivative(var); }

bool poly_less(const MultiPoly& a, const MultiPoly& b) {
  if (a.variables() != b.variables()) return a.variables() < b.variables();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  return std::lexicographical_compare(
      ta.begin(), ta.end(), tb.begin(), tb.end(), [](const auto& x, const auto& y) {
        MultiPoly::TermLess less;
        if (less(x.first, y.first)) return true;
        if (less(y.first, x.first)) return false;
        return x.second < y.second;
      });
}

}  // namespace nashres
