#include "nashres/presentation.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "nashres/error.hpp"

namespace nashres {

std::vector<std::string> TschirnhausenHypersurface::ambient_vars() const {
  std::vector<std::string> vars(base_vars);
  vars.push_back(var);
  return sorted_variables(std::move(vars));
}

MultiPoly TschirnhausenHypersurface::polynomial() const {
  const auto vars = ambient_vars();
  Exponents lead(vars.size(), 0);
  const std::size_t xi = std::find(vars.begin(), vars.end(), var) - vars.begin();
  lead[xi] = b;
  MultiPoly out = MultiPoly::monomial(vars, lead, Rational(1));
  for (std::uint32_t i = 0; i < coeffs.size(); ++i) {
    Exponents e(vars.size(), 0);
    e[xi] = i;
    out += coeffs[i].with_variables(vars) * MultiPoly::monomial(vars, e, Rational(1));
  }
  return out;
}

TschirnhausenHypersurface tschirnhausen_normalize(const MultiPoly& f, const std::string& var,
                                                  std::vector<std::string> base_vars) {
  if (!f.has_variable(var) || !f.involves(var))
    throw ValidationError("polynomial does not involve " + var);
  if (base_vars.empty()) {
    for (const auto& v : f.variables())
      if (v != var) base_vars.push_back(v);
  }
  base_vars = sorted_variables(std::move(base_vars));
  if (std::find(base_vars.begin(), base_vars.end(), var) != base_vars.end())
    throw ValidationError("distinguished variable " + var + " is also a base variable");
  for (const auto& v : f.support())
    if (v != var && std::find(base_vars.begin(), base_vars.end(), v) == base_vars.end())
      throw ValidationError("polynomial uses " + v + ", which is neither " + var + " nor a base variable");

  TschirnhausenHypersurface h;
  h.var = var;
  h.base_vars = base_vars;
  std::vector<std::string> vars(base_vars);
  vars.push_back(var);
  const MultiPoly g = f.with_variables(merge_variables(f.variables(), vars)).restricted_to(vars);
  h.original = g;

  const std::uint32_t b = g.degree_in(var);
  if (b < 2) throw ValidationError("multiplicity must be at least 2 (degree in " + var + " is " +
                                   std::to_string(b) + ")");
  const MultiPoly lead = g.coefficient_in(var, b);
  if (!lead.is_constant()) throw ValidationError("polynomial is not monic in " + var);
  const Rational lc = lead.terms().begin()->second;
  const MultiPoly monic = g * Rational(1 / lc);

  h.b = b;
  h.shift = (monic.coefficient_in(var, b - 1) * make_rational(1, b)).restricted_to(base_vars);
  if (!h.shift.is_zero() && !h.shift.order_at_origin().value())
    throw ValidationError("not centered at origin: the normalizing translation moves the origin");

  const MultiPoly xs = MultiPoly::variable(var, vars) - h.shift.with_variables(h.original.variables());
  const MultiPoly normalized = monic.substitute({{var, xs}});
  if (!normalized.coefficient_in(var, b - 1).is_zero())
    throw std::logic_error("Tschirnhausen normalization left an x^(b-1) term");

  for (std::uint32_t i = 0; i + 2 <= b; ++i) {
    MultiPoly bi = normalized.coefficient_in(var, i).restricted_to(base_vars);
    ExtOrder o = bi.order_at_origin();
    if (!o.is_infinite() && o.value() < b - i)
      throw ValidationError("not centered at origin: B_" + std::to_string(i) + " = " + bi.to_string() +
                            " has order " + o.to_string() + " < " + std::to_string(b - i));
    h.coeffs.push_back(std::move(bi));
  }
  return h;
}

ReesAlgebra elimination_algebra(const TschirnhausenHypersurface& h) {
  ReesAlgebra g(h.base_vars);
  for (std::uint32_t i = 0; i < h.coeffs.size(); ++i) g.add(h.coeffs[i], h.b - i);
  return diff_closure(g);
}

RationalOrder elimination_order(const TschirnhausenHypersurface& h) {
  RationalOrder best;
  for (std::uint32_t i = 0; i < h.coeffs.size(); ++i) {
    ExtOrder o = h.coeffs[i].order_at_origin();
    if (o.is_infinite()) continue;
    best = min(best, RationalOrder(make_rational(static_cast<long>(o.value()), h.b - i)));
  }
  return best;
}

ReesAlgebra hypersurface_ambient_algebra(const TschirnhausenHypersurface& h) {
  ReesAlgebra g(h.ambient_vars());
  g.add(h.polynomial(), h.b);
  return diff_closure(g);
}

std::uint64_t hypersurface_multiplicity_at(const TschirnhausenHypersurface& h, const Point& p) {
  const MultiPoly f = h.original.with_variables(h.ambient_vars());
  if (p.size() != f.variables().size())
    throw ValidationError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                          std::to_string(f.variables().size()));
  if (f.evaluate(p) != 0) throw ValidationError("point is not on the hypersurface");
  ExtOrder o = poly_order_at(f, p);
  if (o.is_infinite()) throw ValidationError("zero polynomial has no multiplicity");
  return o.value();
}

std::vector<std::string> LocalPresentation::default_base(std::size_t d) {
  if (d == 1) return {"z"};
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back("z" + std::to_string(i));
  return out;
}

namespace {

// z (or z1..zd) by default; z1 when d = 1 and the equations are written in z1.
std::vector<std::string> infer_base(std::size_t d, const std::vector<LocalPresentation::Input>& hyps) {
  std::set<std::string> used;
  for (const auto& in : hyps)
    for (const auto& v : in.f.support())
      if (v != in.var) used.insert(v);
  std::vector<std::string> numbered;
  for (std::size_t i = 1; i <= d; ++i) numbered.push_back("z" + std::to_string(i));
  const auto within = [&](const std::vector<std::string>& base) {
    return std::all_of(used.begin(), used.end(), [&](const std::string& v) {
      return std::find(base.begin(), base.end(), v) != base.end();
    });
  };
  const std::vector<std::string> fallback = LocalPresentation::default_base(d);
  if (!within(fallback) && within(numbered)) return numbered;
  return fallback;
}

}  // namespace

LocalPresentation::LocalPresentation(std::size_t d, std::vector<std::string> base_vars,
                                     const std::vector<Input>& hyps)
    : d_(d) {
  if (d == 0) throw ValidationError("base dimension d must be at least 1");
  if (hyps.empty()) throw ValidationError("presentation needs at least one hypersurface");
  if (base_vars.empty()) base_vars = infer_base(d, hyps);
  base_ = sorted_variables(base_vars);
  if (base_.size() != base_vars.size()) throw ValidationError("repeated base variable");
  if (base_.size() != d) throw ValidationError("base has " + std::to_string(base_.size()) +
                                               " variables but d = " + std::to_string(d));
  std::set<std::string> seen;
  for (const auto& in : hyps) {
    if (std::find(base_.begin(), base_.end(), in.var) != base_.end())
      throw ValidationError("distinguished variable " + in.var + " is a base variable");
    if (!seen.insert(in.var).second)
      throw ValidationError("distinguished variable " + in.var + " used twice");
    TschirnhausenHypersurface h = tschirnhausen_normalize(in.f, in.var, base_);
    if (in.b != 0 && h.b != in.b)
      throw ValidationError("declared b = " + std::to_string(in.b) + " but " + in.var +
                            " has degree " + std::to_string(h.b));
    hyps_.push_back(std::move(h));
  }
  std::vector<std::string> all(base_);
  all.insert(all.end(), seen.begin(), seen.end());
  ambient_ = sorted_variables(std::move(all));
}

std::vector<std::string> LocalPresentation::distinguished_vars() const {
  std::vector<std::string> out;
  for (const auto& h : hyps_) out.push_back(h.var);
  return out;
}

std::string LocalPresentation::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < hyps_.size(); ++i) os << (i ? ", " : "") << hyps_[i].original.to_string();
  os << "}";
  return os.str();
}

RationalOrder presentation_elimination_order(const LocalPresentation& p) {
  RationalOrder best;
  for (const auto& h : p.hypersurfaces()) best = min(best, elimination_order(h));
  return best;
}

std::vector<ReesAlgebra> elimination_algebras(const LocalPresentation& p) {
  std::vector<ReesAlgebra> out;
  for (const auto& h : p.hypersurfaces()) out.push_back(elimination_algebra(h));
  return out;
}

ReesAlgebra presentation_ambient_algebra(const LocalPresentation& p) {
  ReesAlgebra out(p.ambient_vars());
  for (const auto& h : p.hypersurfaces()) out = odot(out, hypersurface_ambient_algebra(h));
  return diff_closure(out);
}

bool max_mult_contains(const LocalPresentation& p, const Point& pt) {
  const auto& vars = p.ambient_vars();
  if (pt.size() != vars.size())
    throw ValidationError("point has " + std::to_string(pt.size()) + " coordinates, expected " +
                          std::to_string(vars.size()));
  for (const auto& h : p.hypersurfaces()) {
    ExtOrder o = poly_order_at(h.original.with_variables(vars), pt);
    if (!o.is_infinite() && o.value() < h.b) return false;
  }
  return true;
}

}  // namespace nashres
