#include "nashres/generic_arc.hpp"

#include <algorithm>
#include <numeric>

#include "nashres/error.hpp"

namespace nashres {

namespace {

constexpr int kMultipleRootStages = 64;

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Integer coefficients proportional to the given rationals.
std::vector<Integer> clear_denominators(const std::vector<Rational>& c) {
  Integer l = 1;
  for (const auto& q : c) {
    Integer den = q.get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
  }
  std::vector<Integer> out;
  for (const auto& q : c) out.push_back(Integer(q * l));
  return out;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// The nonzero rational root smallest by (|num|, den), positive first.
std::optional<Rational> smallest_rational_root(const std::vector<Rational>& coeffs) {
  std::size_t lo = 0;
  while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
  std::size_t hi = coeffs.size() - 1;
  while (hi > lo && coeffs[hi] == 0) --hi;
  if (hi == lo) return std::nullopt;
  if (hi == lo + 1) return Rational(-coeffs[lo] / coeffs[hi]);

  std::vector<Rational> trimmed(coeffs.begin() + lo, coeffs.begin() + hi + 1);
  const auto ints = clear_denominators(trimmed);
  std::vector<std::pair<Integer, Integer>> cands;
  for (const auto& p : divisors(ints.front()))
    for (const auto& q : divisors(ints.back())) {
      Integer g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g == 1) cands.emplace_back(p, q);
    }
  std::sort(cands.begin(), cands.end());
  for (const auto& [p, q] : cands) {
    const Rational pos = make_rational(p, q);
    if (eval_poly(trimmed, pos) == 0) return pos;
    if (eval_poly(trimmed, -pos) == 0) return Rational(-pos);
  }
  return std::nullopt;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

PowerSeries horner(const std::vector<PowerSeries>& a, const PowerSeries& y) {
  PowerSeries acc = a.back();
  for (std::size_t i = a.size() - 1; i-- > 0;) acc = acc * y + a[i];
  return acc;
}

// Simple root of F with F(0) of positive order and F'(0) a unit, to O(t^m).
PowerSeries newton_simple_root(std::vector<PowerSeries> a, std::size_t m) {
  for (auto& c : a) c = c.truncated_to(m);
  std::vector<PowerSeries> da;
  for (std::size_t i = 1; i < a.size(); ++i) da.push_back(Rational(static_cast<long>(i)) * a[i]);
  PowerSeries y = PowerSeries::truncated({}, m);
  for (int iter = 0; iter < 64; ++iter) {
    const PowerSeries fy = horner(a, y);
    const ExtOrder o = fy.order();
    if (!o.is_exact()) {
      if (!fy.precision() || *fy.precision() >= m) return y;
      throw PrecisionError("branch coefficients known only to O(t^" + std::to_string(*fy.precision()) + ")");
    }
    y = y - fy * horner(da, y).inverse(m);
  }
  throw std::logic_error("Newton iteration failed to converge on a simple root");
}

}  // namespace

std::map<std::string, PowerSeries> DiagonalArc::series() const {
  std::map<std::string, PowerSeries> out;
  for (std::size_t j = 0; j < base_vars.size(); ++j)
    out.emplace(base_vars[j], PowerSeries::monomial(units[j], alpha));
  return out;
}

DiagonalArc build_diagonal_arc(const std::vector<std::string>& base_vars, const std::vector<Rational>& u,
                               std::uint32_t alpha) {
  if (alpha == 0) throw ValidationError("alpha must be at least 1");
  if (u.size() != base_vars.size())
    throw ValidationError("unit tuple has " + std::to_string(u.size()) + " entries, base has " +
                          std::to_string(base_vars.size()));
  for (const auto& c : u)
    if (c == 0) throw ValidationError("diagonal arc units must be nonzero");
  return DiagonalArc{sorted_variables(base_vars), u, alpha};
}

bool GenericityCertificate::holds() const {
  return std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.holds; });
}

GenericityCertificate diagonal_genericity(const DiagonalArc& a, const std::vector<ReesAlgebra>& elim) {
  GenericityCertificate cert;
  const auto base = a.series();
  for (const auto& g : elim) {
    GenericityCertificate::Entry e;
    const RationalOrder ord = algebra_order_at_origin(g);
    if (!ord.is_infinite()) e.expected = RationalOrder(ord.value() * Rational(a.alpha));
    ArcImage img = image_of_algebra_indexed(Arc(base), g);
    TrustedMin m = onedim_order(img.algebra, "genericity certificate");
    e.image = m.value;
    if (m.witness) e.witness = g.generators()[img.source[*m.witness]].to_string();
    e.holds = !e.image.is_infinite() && e.image == e.expected;
    cert.entries.push_back(std::move(e));
  }
  return cert;
}

bool units_admissible(const std::vector<ReesAlgebra>& elim, const std::vector<Rational>& u) {
  for (const auto& g : elim) {
    const Point origin(g.ambient_vars().size(), Rational(0));
    const auto mins = minimizing_generators(g, origin);
    if (mins.empty()) return false;
    for (auto i : mins) {
      const MultiPoly in0 = g.generators()[i].f.initial_form();
      if (in0.variables().size() != u.size())
        throw ValidationError("unit tuple dimension does not match the base");
      if (in0.evaluate(u) == 0) return false;
    }
  }
  return true;
}

void enumerate_generic_units(const std::vector<ReesAlgebra>& elim, std::size_t d, std::uint32_t bound,
                             const std::function<bool(const std::vector<Rational>&)>& visit) {
  if (d == 0) throw ValidationError("base dimension must be positive");
  for (const auto& g : elim)
    if (g.empty()) throw ValidationError("arc necessarily inside Max mult: an elimination algebra is zero");
  for (long k = 1; k <= static_cast<long>(bound); ++k) {
    std::vector<long> cur(d, -k);
    while (true) {
      const bool on_shell =
          std::any_of(cur.begin(), cur.end(), [&](long v) { return v == k || v == -k; });
      const bool no_zero = std::none_of(cur.begin(), cur.end(), [](long v) { return v == 0; });
      if (on_shell && no_zero) {
        std::vector<Rational> u;
        for (long v : cur) u.emplace_back(v);
        if (units_admissible(elim, u) && visit(u)) return;
      }
      std::size_t pos = d;
      while (pos > 0) {
        --pos;
        if (cur[pos] < k) {
          ++cur[pos];
          break;
        }
        cur[pos] = -k;
        if (pos == 0) {
          pos = d + 1;
          break;
        }
      }
      if (pos == d + 1) break;
    }
  }
}

std::vector<Rational> find_generic_units(const std::vector<ReesAlgebra>& elim, std::size_t d,
                                         std::uint32_t bound) {
  std::vector<Rational> found;
  enumerate_generic_units(elim, d, bound, [&](const std::vector<Rational>& u) {
    found = u;
    return true;
  });
  if (found.empty())
    throw ValidationError("no unit tuple within bound " + std::to_string(bound) + "; try a larger --search-bound");
  return found;
}

PuiseuxLift puiseux_lift(const TschirnhausenHypersurface& h, const std::map<std::string, PowerSeries>& base,
                         std::size_t precision) {
  if (precision == 0) throw ValidationError("precision must be positive");
  const std::uint32_t b = h.b;
  std::vector<PowerSeries> orig(b + 1, PowerSeries());
  for (std::uint32_t i = 0; i < h.coeffs.size(); ++i) orig[i] = poly_compose_series(h.coeffs[i], base);
  orig[b] = PowerSeries::exact({Rational(1)});
  bool nonzero = false;
  for (std::uint32_t i = 0; i < b; ++i) nonzero = nonzero || !orig[i].is_exact_zero();
  if (!nonzero) throw ValidationError("arc necessarily inside Max mult: every coefficient vanishes on the base");

  std::vector<PowerSeries> a = orig;
  PowerSeries root;     // x = root + t^shift * y
  std::size_t shift = 0;
  std::size_t e = 1;
  bool exact_root = false;

  for (int stage = 0;; ++stage) {
    const ExtOrder o0 = a[0].order();
    if (o0.is_infinite()) {
      exact_root = true;
      break;
    }
    if (o0.is_censored())
      throw PrecisionError("branch undetermined: constant coefficient vanishes only to O(t^" +
                           std::to_string(o0.value()) + ")");

    std::size_t r0 = 0;
    for (std::size_t i = 1; i <= b && !r0; ++i) {
      const ExtOrder oi = a[i].order();
      if (oi.is_exact() && oi.value() == 0) r0 = i;
      if (oi.is_censored() && oi.value() == 0) throw PrecisionError("branch coefficient carries no terms");
    }
    if (!r0) throw std::logic_error("Newton polygon lost its unit coefficient");

    if (r0 == 1) {
      if (shift < precision) {
        const PowerSeries y = newton_simple_root(a, precision - shift);
        root = root + y.shifted(shift);
      }
      break;
    }
    if (stage >= kMultipleRootStages)
      throw PrecisionError("branch not separated after " + std::to_string(kMultipleRootStages) +
                           " multiple-root stages");

    // Steepest edge from (0, v0) among points 1..r0.
    const std::uint64_t v0 = o0.value();
    std::optional<Rational> gamma;
    for (std::size_t i = 1; i <= r0; ++i) {
      const ExtOrder oi = a[i].order();
      if (!oi.is_exact()) continue;
      const Rational g = make_rational(static_cast<long>(v0) - static_cast<long>(oi.value()), static_cast<long>(i));
      if (!gamma || g > *gamma) gamma = g;
    }
    for (std::size_t i = 1; i <= r0; ++i) {
      const ExtOrder oi = a[i].order();
      if (!oi.is_censored()) continue;
      const Rational g = make_rational(static_cast<long>(v0) - static_cast<long>(oi.value()), static_cast<long>(i));
      if (g >= *gamma) throw PrecisionError("Newton polygon undecided: a coefficient is censored near the edge");
    }
    if (*gamma <= 0) throw std::logic_error("Newton polygon edge has non-positive slope");

    const std::size_t q = gamma->get_den().get_ui();
    std::uint64_t v = v0;
    if (q > 1) {
      for (auto& c : a) c = c.reparametrized(q);
      for (auto& c : orig) c = c.reparametrized(q);
      root = root.reparametrized(q);
      shift *= q;
      e *= q;
      v *= q;
    }
    const std::size_t g = gamma->get_num().get_ui();

    std::vector<Rational> edge(r0 + 1, Rational(0));
    for (std::size_t i = 0; i <= r0; ++i) {
      const ExtOrder oi = a[i].order();
      if (oi.is_exact() && oi.value() + g * i == v) edge[i] = a[i].coefficient(oi.value());
    }
    const auto c = smallest_rational_root(edge);
    if (!c) throw ExtensionError("edge polynomial of " + h.original.to_string() + " has no rational root");

    std::vector<PowerSeries> shifted_a;
    for (std::size_t i = 0; i <= b; ++i) shifted_a.push_back(a[i].shifted(g * i));
    std::vector<PowerSeries> next;
    for (std::size_t j = 0; j <= b; ++j) {
      PowerSeries acc;
      Rational cp(1);
      for (std::size_t i = j; i <= b; ++i) {
        Integer bin;
        mpz_bin_uiui(bin.get_mpz_t(), i, j);
        acc = acc + Rational(Rational(bin) * cp) * shifted_a[i];
        cp *= *c;
      }
      next.push_back(acc.divided_by_t(v));
    }
    a = std::move(next);
    root = root + PowerSeries::monomial(*c, shift + g);
    shift += g;
  }

  PuiseuxLift out;
  out.e = e;
  out.root = exact_root ? root : root.truncated_to(precision);
  PowerSeries residual = horner(orig, out.root);
  out.residual = residual.order();
  if (out.residual.is_exact())
    throw IdentityError("lifted branch does not satisfy " + h.original.to_string() + ": " + residual.to_string());
  return out;
}

PuiseuxLift puiseux_lift(const TschirnhausenHypersurface& h, const DiagonalArc& base, std::size_t precision) {
  return puiseux_lift(h, base.series(), precision);
}

PresentationLift lift_to_presentation(const LocalPresentation& p, const std::map<std::string, PowerSeries>& base,
                                      std::size_t precision) {
  for (const auto& z : p.base_vars())
    if (!base.count(z)) throw ValidationError("base arc is missing coordinate " + z);
  std::vector<PuiseuxLift> lifts;
  Integer big_e = 1;
  for (const auto& h : p.hypersurfaces()) {
    lifts.push_back(puiseux_lift(h, base, precision));
    big_e = lcm(big_e, Integer(static_cast<unsigned long>(lifts.back().e)));
  }
  const std::size_t e = big_e.get_ui();
  std::map<std::string, PowerSeries> coords;
  for (const auto& z : p.base_vars()) coords.emplace(z, base.at(z).reparametrized(e));
  for (std::size_t i = 0; i < lifts.size(); ++i)
    coords.emplace(p.hypersurfaces()[i].var, lifts[i].root.reparametrized(e / lifts[i].e));
  std::vector<std::size_t> ram;
  for (const auto& l : lifts) ram.push_back(l.e);
  return PresentationLift{validate_arc(to_original_frame(p, Arc(coords)), p), e, ram};
}

PresentationLift lift_to_presentation(const LocalPresentation& p, const DiagonalArc& base,
                                      std::size_t precision) {
  return lift_to_presentation(p, base.series(), precision);
}

GenericArc construct_generic_arc(const LocalPresentation& p, std::uint32_t alpha, std::uint32_t bound,
                                 std::size_t precision) {
  const auto elim = elimination_algebras(p);
  std::optional<GenericArc> result;
  std::size_t tried = 0;
  std::string last_failure;
  enumerate_generic_units(elim, p.d(), bound, [&](const std::vector<Rational>& u) {
    ++tried;
    DiagonalArc base = build_diagonal_arc(p.base_vars(), u, alpha);
    try {
      PresentationLift lift = lift_to_presentation(p, base, precision);
      result = GenericArc{base, std::move(lift), diagonal_genericity(base, elim), tried};
      return true;
    } catch (const ExtensionError& err) {
      last_failure = err.what();
      return false;
    }
  });
  if (!result) {
    if (tried == 0)
      throw ValidationError("no unit tuple within bound " + std::to_string(bound) + "; try a larger --search-bound");
    throw ExtensionError("all " + std::to_string(tried) + " admissible unit tuples within bound " +
                         std::to_string(bound) + " need irrational branches (last: " + last_failure + ")");
  }
  return std::move(*result);
}

GenericityReport verify_genericity(const ValidatedArc& a, const LocalPresentation& p) {
  GenericityReport rep;
  const ContactResult c = contact_order(a);
  rep.r_bar = c.r_bar;
  rep.elimination_order = presentation_elimination_order(p);
  rep.witness = c.witness;
  rep.arc_order = c.arc_order;
  rep.generic = !rep.elimination_order.is_infinite() && rep.r_bar == rep.elimination_order.value();
  rep.base_order = arc_order(project_arc(a, std::nullopt));
  rep.order_identity = rep.base_order == rep.arc_order;
  for (const auto& h : p.hypersurfaces()) {
    const ExtOrder ox = a.normalized.at(h.var).order();
    if (ox.is_exact() && ox.value() == rep.arc_order && !(rep.elimination_order == RationalOrder(Rational(1))))
      rep.tau_guard = false;
  }
  return rep;
}

}  // namespace nashres
