#include "nashres/rees.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "nashres/error.hpp"

namespace nashres {

std::string ReesGenerator::to_string() const {
  std::string body = f.to_string();
  if (f.num_terms() > 1 || body.find('*') != std::string::npos) body = "(" + body + ")";
  return body + "W" + (weight == 1 ? "" : "^" + std::to_string(weight));
}

ReesAlgebra::ReesAlgebra(std::vector<std::string> ambient_vars)
    : vars_(sorted_variables(std::move(ambient_vars))) {}

ReesAlgebra::ReesAlgebra(std::vector<std::string> ambient_vars,
                         const std::vector<ReesGenerator>& gens)
    : ReesAlgebra(std::move(ambient_vars)) {
  for (const auto& g : gens) add(g.f, g.weight);
}

bool ReesAlgebra::add(const MultiPoly& f, std::uint32_t weight) {
  if (weight == 0) throw ValidationError("Rees generator weight must be at least 1");
  if (f.is_zero()) return false;
  for (const auto& v : f.support())
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end())
      throw ValidationError("generator uses variable " + v + " outside the ambient space");
  MultiPoly g = (f.variables() == vars_ ? f : f.restricted_to(vars_)).monic();
  for (const auto& h : gens_)
    if (h.weight == weight && h.f == g) return false;
  gens_.push_back({std::move(g), weight});
  diff_closed_ = false;
  return true;
}

bool ReesAlgebra::contains(const MultiPoly& f, std::uint32_t weight) const {
  if (f.is_zero()) return true;
  MultiPoly g = f.monic();
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const ReesGenerator& h) { return h.weight == weight && h.f == g; });
}

ReesAlgebra ReesAlgebra::with_variables(const std::vector<std::string>& vars) const {
  ReesAlgebra out(merge_variables(vars_, vars));
  for (const auto& g : gens_) out.gens_.push_back({g.f.with_variables(out.vars_), g.weight});
  out.diff_closed_ = diff_closed_ && out.vars_ == vars_;
  return out;
}

ReesAlgebra ReesAlgebra::without_variables(const std::vector<std::string>& vars) const {
  ReesAlgebra out(vars_);
  for (const auto& g : gens_) {
    bool uses = std::any_of(vars.begin(), vars.end(), [&](const auto& v) { return g.f.involves(v); });
    if (!uses) out.gens_.push_back(g);
  }
  return out;
}

bool ReesAlgebra::same_generators(const ReesAlgebra& o) const {
  if (gens_.size() != o.gens_.size()) return false;
  return std::all_of(gens_.begin(), gens_.end(),
                     [&](const ReesGenerator& g) { return o.contains(g.f, g.weight); });
}

std::string ReesAlgebra::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < gens_.size(); ++i) os << (i ? ", " : "") << gens_[i].to_string();
  os << "]";
  return os.str();
}

ReesAlgebra odot(const ReesAlgebra& a, const ReesAlgebra& b) {
  auto contains_all = [](const std::vector<std::string>& big, const std::vector<std::string>& small) {
    return std::all_of(small.begin(), small.end(), [&](const std::string& v) {
      return std::find(big.begin(), big.end(), v) != big.end();
    });
  };
  const auto& va = a.ambient_vars();
  const auto& vb = b.ambient_vars();
  if (!contains_all(va, vb) && !contains_all(vb, va))
    throw ValidationError("odot: incompatible ambient variable lists");
  ReesAlgebra out(merge_variables(va, vb));
  for (const auto& g : a.generators()) out.add(g.f, g.weight);
  for (const auto& g : b.generators()) out.add(g.f, g.weight);
  if (a.diff_closed() && b.diff_closed()) {
    ReesAlgebra closed = diff_closure(out);
    if (closed.same_generators(out)) return closed;
  }
  return out;
}

ReesAlgebra diff_closure(const ReesAlgebra& g) {
  ReesAlgebra out(g.ambient_vars());
  std::deque<ReesGenerator> pending;
  auto push = [&](const MultiPoly& f, std::uint32_t w) {
    if (out.add(f, w)) pending.push_back(out.generators().back());
  };
  for (const auto& gen : g.generators()) push(gen.f, gen.weight);

  while (!pending.empty()) {
    const ReesGenerator cur = pending.front();
    pending.pop_front();
    if (cur.weight < 2) continue;
    for (const auto& v : out.ambient_vars()) {
      MultiPoly d = cur.f.derivative(v);
      push(d, cur.weight - 1);
    }
    for (const auto& v : out.ambient_vars()) {
      const std::uint32_t n = cur.weight;
      if (cur.f.degree_in(v) != n) continue;
      MultiPoly lead = cur.f.coefficient_in(v, n);
      if (!lead.is_constant()) continue;
      if (!cur.f.coefficient_in(v, n - 1).is_zero()) continue;
      const Rational c = lead.terms().begin()->second;
      push(MultiPoly::variable(v, out.ambient_vars()), 1);
      for (std::uint32_t i = 0; i + 2 <= n; ++i) {
        MultiPoly b = cur.f.coefficient_in(v, i);
        push(b * Rational(1 / c), n - i);
      }
    }
  }
  out.diff_closed_ = true;
  return out;
}

RationalOrder algebra_order_at(const ReesAlgebra& g, const Point& p) {
  RationalOrder best;
  for (const auto& gen : g.generators()) {
    ExtOrder o = poly_order_at(gen.f, p);
    if (o.is_infinite()) continue;
    best = min(best, RationalOrder(make_rational(static_cast<long>(o.value()), gen.weight)));
  }
  return best;
}

RationalOrder algebra_order_at_origin(const ReesAlgebra& g) {
  return algebra_order_at(g, Point(g.ambient_vars().size(), Rational(0)));
}

std::vector<std::size_t> minimizing_generators(const ReesAlgebra& g, const Point& p) {
  const RationalOrder best = algebra_order_at(g, p);
  std::vector<std::size_t> out;
  if (best.is_infinite()) return out;
  for (std::size_t i = 0; i < g.generators().size(); ++i) {
    const auto& gen = g.generators()[i];
    ExtOrder o = poly_order_at(gen.f, p);
    if (o.is_infinite()) continue;
    if (make_rational(static_cast<long>(o.value()), gen.weight) == best.value()) out.push_back(i);
  }
  return out;
}

bool sing_contains(const ReesAlgebra& g, const Point& p) {
  return std::all_of(g.generators().begin(), g.generators().end(), [&](const ReesGenerator& gen) {
    ExtOrder o = poly_order_at(gen.f, p);
    return o.is_infinite() || o.value() >= gen.weight;
  });
}

OneDimAlgebra OneDimAlgebra::from_pairs(
    const std::vector<std::pair<std::uint64_t, std::uint32_t>>& pairs) {
  OneDimAlgebra out;
  for (const auto& [a, l] : pairs) out.generators.push_back({ExtOrder::exact(a), l});
  return out;
}

std::string OneDimAlgebra::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < generators.size(); ++i)
    os << (i ? ", " : "") << "(" << generators[i].a.to_string() << "," << generators[i].l << ")";
  os << "]";
  return os.str();
}

TrustedMin onedim_order(const OneDimAlgebra& a, const std::string& context) {
  TrustedMin out;
  bool censored_seen = false;
  for (std::size_t i = 0; i < a.generators.size(); ++i) {
    const auto& g = a.generators[i];
    if (g.l == 0) throw ValidationError("one-dimensional generator with weight 0");
    if (g.a.is_infinite()) continue;
    if (g.a.is_censored()) {
      censored_seen = true;
      continue;
    }
    RationalOrder q(make_rational(static_cast<long>(g.a.value()), g.l));
    if (q < out.value) {
      out.value = q;
      out.witness = i;
    }
  }
  if (!censored_seen) return out;
  if (out.value.is_infinite())
    throw PrecisionError(context + ": every image is zero to the available precision");
  for (const auto& g : a.generators) {
    if (!g.a.is_censored()) continue;
    if (make_rational(static_cast<long>(g.a.value()), g.l) <= out.value.value())
      throw PrecisionError(context + ": a censored image t^(>=" + std::to_string(g.a.value()) +
                           ")W^" + std::to_string(g.l) + " could undercut the minimum " +
                           out.value.to_string());
  }
  return out;
}

OneDimAlgebra onedim_transform(const OneDimAlgebra& a) {
  if (a.generators.empty()) throw ValidationError("not permissible: empty algebra");
  OneDimAlgebra out;
  for (const auto& g : a.generators) {
    if (g.a.is_infinite()) {
      out.generators.push_back(g);
      continue;
    }
    const std::uint64_t v = g.a.value();
    if (v < g.l) {
      if (g.a.is_censored())
        throw PrecisionError("blow-up permissibility undecidable for t^(>=" + std::to_string(v) +
                             ")W^" + std::to_string(g.l));
      throw ValidationError("not permissible: t^" + std::to_string(v) + "W^" + std::to_string(g.l) +
                            " has order below 1");
    }
    out.generators.push_back(
        {g.a.is_exact() ? ExtOrder::exact(v - g.l) : ExtOrder::at_least(v - g.l), g.l});
  }
  return out;
}

std::uint64_t onedim_resolution_steps(const OneDimAlgebra& a) {
  if (a.generators.empty()) throw ValidationError("one-dimensional algebra is empty");
  TrustedMin m = onedim_order(a, "resolution steps");
  if (m.value.is_infinite()) throw ValidationError("order is infinite; the sequence never terminates");
  const Integer need = floor_of(m.value.value()) + 1;
  for (const auto& g : a.generators)
    if (g.a.is_censored() && make_rational(static_cast<long>(g.a.value()), g.l) < Rational(need))
      throw PrecisionError("censored image t^(>=" + std::to_string(g.a.value()) + ")W^" +
                           std::to_string(g.l) + " needs bound at least " +
                           Integer(need * g.l).get_str());

  auto below_one = [](const OneDimAlgebra& cur) {
    for (const auto& g : cur.generators)
      if (g.a.is_exact() && g.a.value() < g.l) return true;
    return false;
  };
  std::uint64_t steps = 0;
  OneDimAlgebra cur = a;
  while (!below_one(cur)) {
    cur = onedim_transform(cur);
    ++steps;
  }
  return steps;
}

}  // namespace nashres
