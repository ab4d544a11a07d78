#include "nashres/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "nashres/error.hpp"
#include "nashres/io.hpp"
#include "nashres/nash.hpp"

namespace nashres {

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

struct Candidate {
  std::string kind;
  std::string recipe;
  ValidatedArc arc;
};

class Sampler {
 public:
  Sampler(const LocalPresentation& p, const Arc& generic, std::size_t precision, std::uint64_t seed)
      : p_(p), generic_(generic), precision_(precision), rng_(seed) {}

  Candidate draw(std::size_t kind) {
    switch (kind % 4) {
      case 0:
        return reparametrized();
      case 1:
        return composed();
      case 2:
        return monomial_lift();
      default:
        return deformed_lift();
    }
  }

 private:
  const LocalPresentation& p_;
  const Arc& generic_;
  std::size_t precision_;
  std::mt19937_64 rng_;

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  int nonzero(int bound) {
    const int v = uniform(1, bound);
    return uniform(0, 1) ? v : -v;
  }

  Candidate reparametrized() {
    const int e = uniform(2, 4);
    return {"reparametrized", "generic arc with t -> t^" + std::to_string(e),
            validate_arc(reparametrize_arc(generic_, static_cast<std::size_t>(e)), p_)};
  }

  Candidate composed() {
    const int c = nonzero(3);
    const int d = uniform(-3, 3);
    const PowerSeries h = PowerSeries::exact({Rational(0), Rational(c), Rational(d)});
    std::map<std::string, PowerSeries> coords;
    for (const auto& [v, s] : generic_.coords()) coords.emplace(v, s.compose(h));
    return {"composed", "generic arc with t -> " + h.to_string(), validate_arc(Arc(std::move(coords)), p_)};
  }

  Candidate monomial_lift() {
    std::map<std::string, PowerSeries> base;
    std::ostringstream recipe;
    recipe << "lift of";
    for (const auto& z : p_.base_vars()) {
      const int u = nonzero(3);
      const int a = uniform(1, 4);
      base.emplace(z, PowerSeries::monomial(Rational(u), static_cast<std::size_t>(a)));
      recipe << ' ' << z << " = " << base.at(z).to_string() << ';';
    }
    return {"monomial-lift", recipe.str(), lift_to_presentation(p_, base, precision_).arc};
  }

  Candidate deformed_lift() {
    const int a = uniform(1, 3);
    std::map<std::string, PowerSeries> base;
    std::ostringstream recipe;
    recipe << "lift of";
    for (const auto& z : p_.base_vars()) {
      const int u = nonzero(3);
      const int w = uniform(-3, 3);
      base.emplace(z, PowerSeries::monomial(Rational(u), static_cast<std::size_t>(a)) +
                          PowerSeries::monomial(Rational(w), static_cast<std::size_t>(a) + 1));
      recipe << ' ' << z << " = " << base.at(z).to_string() << ';';
    }
    return {"deformed-lift", recipe.str(), lift_to_presentation(p_, base, precision_).arc};
  }
};

SampleRecord evaluate(const ValidatedArc& va, const ReesAlgebra& ambient) {
  SampleRecord rec;
  rec.arc = va.arc;
  rec.contact = contact_order(va);
  rec.without_x = contact_order_without_x(va);
  rec.onedim_rho = onedim_resolution_steps(image_of_algebra(va.normalized, ambient));
  const PresentationNash nash = nash_sequence_presentation(va);
  rec.nash_rho = nash.rho;
  std::optional<std::uint64_t> min_rho;
  for (const auto& c : contact_orders_per_hypersurface(va))
    if (c) rec.min_r_i = min(rec.min_r_i, c->r);
  for (const auto& s : nash.per_hypersurface)
    if (s) min_rho = min_rho ? std::min(*min_rho, s->rho) : s->rho;
  rec.min_rho_i = min_rho.value_or(0);
  return rec;
}

std::string replay(const Arc& a) { return arc_to_json(a).dump(); }

std::string describe(const SampleRecord& s) {
  return "sample " + std::to_string(s.index) + " (" + s.kind + "): " + replay(s.arc);
}

class Checks {
 public:
  explicit Checks(std::vector<CheckRecord>& out) : out_(out) {}

  void add(const std::string& name, bool pass, const std::string& witness) { out_.push_back({name, pass, witness}); }

  /// Passes when pred holds on every sample; the witness is the first offender.
  void every(const std::string& name, const std::vector<SampleRecord>& samples,
             const std::function<bool(const SampleRecord&)>& pred, const std::string& ok_witness) {
    for (const auto& s : samples)
      if (!pred(s)) return add(name, false, describe(s));
    add(name, true, ok_witness);
  }

 private:
  std::vector<CheckRecord>& out_;
};

}  // namespace

bool VerifyResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

VerifyResult verify_presentation(const LocalPresentation& p, const VerifyOptions& opt) {
  VerifyResult out;
  out.elimination_order = presentation_elimination_order(p);
  if (out.elimination_order.is_infinite())
    throw ValidationError("arc necessarily inside Max mult: the elimination order is infinite");
  const Rational ord = out.elimination_order.value();

  GenericArc g = construct_generic_arc(p, opt.alpha, opt.search_bound, opt.precision);
  out.generic_base = g.base;
  out.generic_arc = g.lift.arc.arc;
  out.generic_e = g.lift.e;
  out.tuples_tried = g.tuples_tried;
  out.certificate = g.certificate;
  out.genericity = verify_genericity(g.lift.arc, p);

  const ReesAlgebra ambient = presentation_ambient_algebra(p);
  SampleRecord generic = evaluate(g.lift.arc, ambient);
  generic.kind = "generic";
  generic.recipe = "diagonal base with units";
  for (const auto& u : g.base.units) generic.recipe += " " + to_string(u);
  out.generic_contact = generic.contact;
  out.samples.push_back(generic);

  const std::size_t q = static_cast<std::size_t>(ord.get_den().get_ui());
  out.rho_bar_reparam = q;
  out.reparam_contact = q == 1 ? generic.contact : contact_order(validate_arc(reparametrize_arc(out.generic_arc, q), p));

  Sampler sampler(p, out.generic_arc, opt.precision, opt.seed ^ fnv1a(p.to_string()));
  const std::size_t tries_per_kind = 16;
  const std::size_t max_attempts = 4 * tries_per_kind;
  for (std::size_t i = 1; i <= opt.trials; ++i) {
    std::optional<SampleRecord> rec;
    for (std::size_t attempt = 0; attempt < max_attempts && !rec; ++attempt) {
      const std::size_t kind = i - 1 + attempt / tries_per_kind;
      try {
        Candidate c = sampler.draw(kind);
        if (c.arc.in_max_mult) {
          ++out.resamples;
          continue;
        }
        rec = evaluate(c.arc, ambient);
        rec->kind = c.kind;
        rec->recipe = c.recipe;
      } catch (const PrecisionError&) {
        ++out.resamples;
      } catch (const ExtensionError&) {
        ++out.resamples;
      }
    }
    if (!rec) throw PrecisionError("no valid sample arc after " + std::to_string(max_attempts) + " attempts");
    rec->index = i;
    out.samples.push_back(std::move(*rec));
  }

  Checks checks(out.checks);
  const std::string ord_s = fraction_string(ord);
  const Rational floor_ord(floor_of(ord));

  checks.add("generic arc attains the elimination order", generic.contact.r_bar == ord,
             "r_bar = " + fraction_string(generic.contact.r_bar) + " on " + replay(out.generic_arc));
  checks.add("genericity certificate", out.certificate.holds() && out.genericity.generic,
             out.genericity.witness);
  checks.add("arc order equals base order", out.genericity.order_identity,
             "ord(arc) = " + std::to_string(out.genericity.arc_order) +
                 ", ord(base) = " + std::to_string(out.genericity.base_order));
  checks.add("tau guard", out.genericity.tau_guard, "elimination order " + ord_s);

  checks.every("r_bar >= elimination order", out.samples, [&](const SampleRecord& s) { return s.contact.r_bar >= ord; },
               "all " + std::to_string(out.samples.size()) + " samples");
  checks.every(
      "rho = floor(r) by closed form, one-dimensional transform and blow-up", out.samples,
      [](const SampleRecord& s) { return s.contact.rho == s.onedim_rho && s.contact.rho == s.nash_rho; },
      "all samples agree");
  checks.every(
      "contact order is independent of x", out.samples,
      [](const SampleRecord& s) { return s.contact.r == s.without_x; }, "all samples agree");
  checks.every(
      "r and rho are minima over the hypersurfaces", out.samples,
      [](const SampleRecord& s) {
        return s.contact.r == s.min_r_i && s.nash_rho == s.min_rho_i &&
               s.min_rho_i == static_cast<std::uint64_t>(to_int64(floor_of(s.min_r_i.value())));
      },
      "all samples agree");
  checks.every(
      "chain r_bar >= rho_bar >= floor(elimination order)", out.samples,
      [&](const SampleRecord& s) { return s.contact.r_bar >= s.contact.rho_bar && s.contact.rho_bar >= floor_ord; },
      "all samples satisfy the chain");
  checks.every(
      "reparametrization scales the contact order", out.samples,
      [&](const SampleRecord& s) {
        if (s.kind != "reparametrized") return true;
        const Rational e = make_rational(static_cast<long>(arc_order(s.arc)), static_cast<long>(arc_order(out.generic_arc)));
        return s.contact.r.value() == e * generic.contact.r.value() && s.contact.r_bar == generic.contact.r_bar;
      },
      "r(t -> t^e) = e * r on every reparametrized sample");

  Rational min_r_bar = generic.contact.r_bar;
  std::size_t argmin = 0;
  for (const auto& s : out.samples)
    if (s.contact.r_bar < min_r_bar) {
      min_r_bar = s.contact.r_bar;
      argmin = s.index;
    }
  checks.add("minimum of r_bar over samples equals the elimination order", min_r_bar == ord,
             "min r_bar = " + fraction_string(min_r_bar) + " at sample " + std::to_string(argmin));

  checks.add("rho_bar attains the elimination order after reparametrization",
             out.reparam_contact.rho_bar == ord && out.reparam_contact.r_bar == ord,
             "t -> t^" + std::to_string(q) + ": rho_bar = " + fraction_string(out.reparam_contact.rho_bar));

  Rational max_rho_bar = out.reparam_contact.rho_bar;
  bool bounded = true;
  std::string offender;
  for (const auto& s : out.samples) {
    if (s.contact.r_bar != ord) continue;
    if (s.contact.rho_bar > ord && bounded) {
      bounded = false;
      offender = describe(s);
    }
    max_rho_bar = std::max(max_rho_bar, s.contact.rho_bar);
  }
  checks.add("maximum of rho_bar over minimizing arcs equals the elimination order", bounded && max_rho_bar == ord,
             bounded ? "max rho_bar = " + fraction_string(max_rho_bar) : offender);
  return out;
}

}  // namespace nashres
