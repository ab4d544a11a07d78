#include "nashres/nash.hpp"

#include <algorithm>
#include <numeric>

#include "nashres/error.hpp"

namespace nashres {

namespace {

constexpr std::uint64_t kStepLimit = 4096;

std::size_t t_index(const MultiPoly& g) {
  auto i = g.index_of("t");
  if (!i) throw std::logic_error("chart equation lost its t variable");
  return *i;
}

void check_residual(const NashState& s) {
  std::map<std::string, PowerSeries> subs = s.arc;
  subs["t"] = PowerSeries::t();
  PowerSeries r = poly_compose_series(s.g, subs);
  if (r.order().is_exact())
    throw IdentityError("lifted arc leaves the strict transform at step " + std::to_string(s.step) +
                        ": residual " + r.to_string());
}

bool factored_in_max_mult(const ValidatedArc& a, const TschirnhausenHypersurface& h) {
  const ReesAlgebra elim = elimination_algebra(h);
  for (const auto& gen : elim.generators())
    if (!poly_compose_series(gen.f, a.arc.coords()).is_exact_zero()) return false;
  return true;
}

}  // namespace

NashState nash_initial_state(const MultiPoly& f, const Arc& a) {
  if (f.has_variable("t") && f.involves("t"))
    throw ValidationError("hypersurface equation may not involve the arc parameter t");
  std::vector<std::string> vars;
  for (const auto& v : f.variables())
    if (v != "t") vars.push_back(v);
  NashState s;
  vars.push_back("t");
  s.g = f.with_variables(merge_variables(f.variables(), {"t"})).restricted_to(vars);
  for (const auto& v : s.g.variables())
    if (v != "t") s.arc.emplace(v, a.at(v));
  if (s.g.coefficient(Exponents(s.g.variables().size(), 0)) != 0)
    throw ValidationError("hypersurface does not pass through the origin");
  return s;
}

std::uint64_t nash_multiplicity(const NashState& s) {
  ExtOrder o = s.g.order_at_origin();
  if (o.is_infinite()) throw ValidationError("chart equation vanished identically");
  return o.value();
}

NashState nash_step(const NashState& s, Point* center) {
  const std::uint64_t m = nash_multiplicity(s);
  if (m == 0) throw ValidationError("center is not on the strict transform");
  const auto& vars = s.g.variables();
  const std::size_t ti = t_index(s.g);

  MultiPoly g(vars);
  bool hits_m = false;
  for (const auto& [e, c] : s.g.terms()) {
    const std::uint64_t deg = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    if (deg < m) throw std::logic_error("t^m does not divide the total transform");
    if (deg == m) hits_m = true;
    Exponents f = e;
    f[ti] = static_cast<std::uint32_t>(deg - m);
    g.add_term(f, c);
  }
  if (!hits_m) throw std::logic_error("t^(m+1) divides the total transform");

  NashState out;
  out.step = s.step + 1;
  Point c(vars.size(), Rational(0));
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i == ti) continue;
    const PowerSeries lifted = s.arc.at(vars[i]).divided_by_t(1);
    if (lifted.precision() && *lifted.precision() == 0)
      throw PrecisionError("center of step " + std::to_string(out.step) + " is undetermined");
    c[i] = lifted.coefficient(0);
    out.arc.emplace(vars[i], lifted - PowerSeries::exact({c[i]}));
  }
  out.g = g.translate(c);
  if (center) *center = std::move(c);
  return out;
}

NashSequence nash_sequence(const MultiPoly& f, const Arc& a, const NashOptions& opt) {
  NashState s = nash_initial_state(f, a);
  const std::uint64_t m0 = nash_multiplicity(s);
  if (m0 == 0) throw ValidationError("origin is not on the hypersurface");

  NashSequence seq;
  seq.variables = s.g.variables();
  seq.multiplicities.push_back(m0);
  if (opt.record_trace) seq.trace.push_back({0, Point(seq.variables.size(), Rational(0)), m0, s.g.to_string()});
  if (opt.check_residual) check_residual(s);

  std::uint64_t m = m0;
  while (m == m0) {
    if (s.step >= kStepLimit)
      throw ValidationError("multiplicity did not drop after " + std::to_string(kStepLimit) +
                            " blow-ups; the arc appears to lie inside Max mult");
    Point center;
    try {
      s = nash_step(s, &center);
    } catch (const PrecisionError&) {
      throw PrecisionError("supply arc to >= " + std::to_string(s.step + 2) + " terms");
    }
    m = nash_multiplicity(s);
    if (m > seq.multiplicities.back()) throw IdentityError("Nash multiplicity increased");
    seq.multiplicities.push_back(m);
    seq.centers.push_back(center);
    if (opt.record_trace) seq.trace.push_back({s.step, center, m, s.g.to_string()});
    if (opt.check_residual) check_residual(s);
  }
  seq.rho = s.step;
  seq.precision_consumed = s.step + 1;
  return seq;
}

NashSequence nash_sequence_hypersurface(const ValidatedArc& a, std::size_t index, const NashOptions& opt) {
  if (a.in_max_mult) throw ValidationError("arc inside Max mult");
  const auto& hyps = a.presentation.hypersurfaces();
  if (index >= hyps.size()) throw ValidationError("no hypersurface with index " + std::to_string(index));
  const auto& h = hyps[index];
  if (factored_in_max_mult(a, h)) throw ValidationError("arc inside Max mult of the hypersurface " + h.original.to_string());
  return nash_sequence(h.polynomial(), a.normalized.restricted(h.ambient_vars()), opt);
}

PresentationNash nash_sequence_presentation(const ValidatedArc& a, const NashOptions& opt) {
  PresentationNash out;
  std::optional<std::uint64_t> best;
  for (std::size_t i = 0; i < a.presentation.hypersurfaces().size(); ++i) {
    if (factored_in_max_mult(a, a.presentation.hypersurfaces()[i])) {
      out.per_hypersurface.push_back(std::nullopt);
      continue;
    }
    out.per_hypersurface.push_back(nash_sequence_hypersurface(a, i, opt));
    const auto r = out.per_hypersurface.back()->rho;
    best = best ? std::min(*best, r) : r;
  }
  if (!best) throw ValidationError("arc inside Max mult");
  out.rho = *best;
  return out;
}

}  // namespace nashres
