#include "nashres/arcs.hpp"

#include <algorithm>
#include <sstream>

#include "nashres/error.hpp"

namespace nashres {

Arc::Arc(std::map<std::string, PowerSeries> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw ValidationError("arc has no coordinates");
  bool all_zero = true;
  for (const auto& [v, s] : coords_) {
    ExtOrder o = s.order();
    if (o.is_exact() && o.value() == 0) throw ValidationError("arc not through the origin: coordinate " + v);
    if (s.precision() && *s.precision() == 0)
      throw PrecisionError("coordinate " + v + " carries no coefficients");
    if (!s.is_exact_zero()) all_zero = false;
  }
  if (all_zero) throw ValidationError("arc is the constant arc at the origin");
}

const PowerSeries& Arc::at(const std::string& var) const {
  auto it = coords_.find(var);
  if (it == coords_.end()) throw ValidationError("arc has no coordinate " + var);
  return it->second;
}

std::vector<std::string> Arc::variables() const {
  std::vector<std::string> out;
  for (const auto& kv : coords_) out.push_back(kv.first);
  return sorted_variables(std::move(out));
}

std::optional<std::size_t> Arc::precision() const {
  std::optional<std::size_t> p;
  for (const auto& kv : coords_) p = min_precision(p, kv.second.precision());
  return p;
}

Arc Arc::restricted(const std::vector<std::string>& vars) const {
  std::map<std::string, PowerSeries> out;
  for (const auto& v : vars) out.emplace(v, at(v));
  Arc a;
  a.coords_ = std::move(out);
  return a;
}

std::string Arc::to_string() const {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (const auto& v : variables()) {
    os << (first ? "" : ", ") << v << " = " << at(v).to_string();
    first = false;
  }
  os << ")";
  return os.str();
}

std::uint64_t arc_order(const Arc& a) {
  std::optional<std::uint64_t> best;
  std::optional<std::uint64_t> censored;
  for (const auto& [v, s] : a.coords()) {
    ExtOrder o = s.order();
    if (o.is_exact()) best = best ? std::min(*best, o.value()) : o.value();
    if (o.is_censored()) censored = censored ? std::min(*censored, o.value()) : o.value();
  }
  if (!best) throw PrecisionError("every arc coordinate vanishes to the available precision");
  if (censored && *censored < *best)
    throw PrecisionError("arc order undecided: a coordinate vanishes only to O(t^" +
                         std::to_string(*censored) + ")");
  return *best;
}

Arc reparametrize_arc(const Arc& a, std::size_t e) {
  std::map<std::string, PowerSeries> out;
  for (const auto& [v, s] : a.coords()) out.emplace(v, s.reparametrized(e));
  return Arc(std::move(out));
}

namespace {

Arc shift_frame(const LocalPresentation& p, const Arc& a, int sign) {
  std::map<std::string, PowerSeries> coords = a.coords();
  std::map<std::string, PowerSeries> base;
  for (const auto& z : p.base_vars()) base.emplace(z, a.at(z));
  for (const auto& h : p.hypersurfaces()) {
    if (h.shift.is_zero()) continue;
    PowerSeries s = poly_compose_series(h.shift, base);
    PowerSeries& x = coords.at(h.var);
    x = sign > 0 ? x + s : x - s;
  }
  return Arc(std::move(coords));
}

void require_coordinates(const LocalPresentation& p, const Arc& a) {
  for (const auto& v : p.ambient_vars())
    if (!a.has(v)) throw ValidationError("arc is missing coordinate " + v);
  for (const auto& v : a.variables())
    if (std::find(p.ambient_vars().begin(), p.ambient_vars().end(), v) == p.ambient_vars().end())
      throw ValidationError("arc has coordinate " + v + " outside the presentation");
}

}  // namespace

Arc to_normalized_frame(const LocalPresentation& p, const Arc& a) { return shift_frame(p, a, +1); }
Arc to_original_frame(const LocalPresentation& p, const Arc& normalized) {
  return shift_frame(p, normalized, -1);
}

std::string Certificate::to_string() const {
  if (kind == Kind::ExactZero) return var + ": exact zero";
  return var + ": zero to O(t^" + std::to_string(precision) + ")";
}

ValidatedArc validate_arc(const Arc& a, const LocalPresentation& p) {
  require_coordinates(p, a);
  ValidatedArc out{a, to_normalized_frame(p, a), p, {}, false};
  for (const auto& h : p.hypersurfaces()) {
    PowerSeries img = poly_compose_series(h.original, a.coords());
    ExtOrder o = img.order();
    if (o.is_exact())
      throw ValidationError("arc not on variety: " + h.original.to_string() + " maps to " + img.to_string());
    if (o.is_infinite())
      out.certificates.push_back({h.var, Certificate::Kind::ExactZero, 0});
    else
      out.certificates.push_back({h.var, Certificate::Kind::ZeroToPrecision, o.value()});
  }
  bool killed = true;
  for (const auto& g : elimination_algebras(p)) {
    for (const auto& gen : g.generators()) {
      if (!poly_compose_series(gen.f, a.coords()).is_exact_zero()) {
        killed = false;
        break;
      }
    }
    if (!killed) break;
  }
  out.in_max_mult = killed;
  return out;
}

Arc project_arc(const ValidatedArc& a, std::optional<std::size_t> hypersurface) {
  std::vector<std::string> vars = a.presentation.base_vars();
  if (hypersurface) {
    if (*hypersurface >= a.presentation.hypersurfaces().size())
      throw ValidationError("no hypersurface with index " + std::to_string(*hypersurface));
    vars.push_back(a.presentation.hypersurfaces()[*hypersurface].var);
  }
  return a.arc.restricted(sorted_variables(vars));
}

ArcImage image_of_algebra_indexed(const Arc& a, const ReesAlgebra& g) {
  ArcImage out;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const auto& gen = g.generators()[i];
    ExtOrder o = poly_compose_series(gen.f, a.coords()).order();
    if (o.is_infinite()) continue;
    out.algebra.generators.push_back({o, gen.weight});
    out.source.push_back(i);
  }
  return out;
}

OneDimAlgebra image_of_algebra(const Arc& a, const ReesAlgebra& g) {
  return image_of_algebra_indexed(a, g).algebra;
}

RationalOrder base_image_order(const Arc& base, const ReesAlgebra& g) {
  return onedim_order(image_of_algebra(base, g), "image of algebra").value;
}

namespace {

void reject_max_mult(const ValidatedArc& a) {
  if (a.in_max_mult) {
    if (presentation_elimination_order(a.presentation).is_infinite())
      throw ValidationError("arc necessarily inside Max mult: the elimination algebra is zero");
    throw ValidationError("arc inside Max mult");
  }
}

ContactResult finish(const RationalOrder& r, std::uint64_t ord, std::string witness) {
  ContactResult c;
  c.r = r;
  c.arc_order = ord;
  c.witness = std::move(witness);
  c.rho = to_int64(floor_of(r.value()));
  c.r_bar = r.value() / Rational(static_cast<long>(ord));
  c.rho_bar = make_rational(static_cast<long>(c.rho), static_cast<long>(ord));
  return c;
}

}  // namespace

ContactResult contact_order(const ValidatedArc& a) {
  reject_max_mult(a);
  const ReesAlgebra g = presentation_ambient_algebra(a.presentation);
  ArcImage img = image_of_algebra_indexed(a.normalized, g);
  TrustedMin m = onedim_order(img.algebra, "order of contact");
  if (m.value.is_infinite()) throw ValidationError("arc inside Max mult");
  return finish(m.value, arc_order(a.arc), g.generators()[img.source[*m.witness]].to_string());
}

RationalOrder contact_order_without_x(const ValidatedArc& a) {
  reject_max_mult(a);
  const Arc base = project_arc(a, std::nullopt);
  OneDimAlgebra all;
  for (const auto& g : elimination_algebras(a.presentation)) {
    OneDimAlgebra part = image_of_algebra(base, g);
    all.generators.insert(all.generators.end(), part.generators.begin(), part.generators.end());
  }
  return onedim_order(all, "order of contact without x").value;
}

std::vector<std::optional<ContactResult>> contact_orders_per_hypersurface(const ValidatedArc& a) {
  std::vector<std::optional<ContactResult>> out;
  const auto& hyps = a.presentation.hypersurfaces();
  for (std::size_t i = 0; i < hyps.size(); ++i) {
    LocalPresentation single(a.presentation.d(), a.presentation.base_vars(),
                             {{hyps[i].var, hyps[i].b, hyps[i].original}});
    const ValidatedArc factor = validate_arc(project_arc(a, i), single);
    if (factor.in_max_mult)
      out.push_back(std::nullopt);
    else
      out.push_back(contact_order(factor));
  }
  return out;
}

}  // namespace nashres
