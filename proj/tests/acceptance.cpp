// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "identities.hpp"
#include "nashres/cli.hpp"
#include "nashres/parse.hpp"
#include "nashres/verify.hpp"

using namespace nashres;

namespace {

const std::string corpus = NASHRES_CORPUS_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::uint64_t floor_u(const RationalOrder& r) { return static_cast<std::uint64_t>(to_int64(floor_of(r.value()))); }

Arc exact_arc(const std::map<std::string, std::string>& coords) {
  std::map<std::string, PowerSeries> m;
  for (const auto& [v, s] : coords) m.emplace(v, PowerSeries::from_poly(parse_poly(s), std::nullopt));
  return Arc(std::move(m));
}

// rho is checked against floor(r) by the contact algebra and the blow-up simulator.
void rho_is_floor(Outcome& o, const ValidatedArc& a, const std::string& label) {
  const ContactResult c = contact_order(a);
  const std::uint64_t nash = nash_sequence_presentation(a).rho;
  o.require(c.rho == floor_u(c.r) && nash == c.rho,
            label + ": r = " + c.r.to_string() + ", rho = " + std::to_string(c.rho) + ", nash " + std::to_string(nash));
}

Outcome cusp_end_to_end() {
  Outcome o;
  const LocalPresentation p = load_presentation(corpus + "/cusp.json");
  o.require(presentation_elimination_order(p) == RationalOrder(make_rational(3, 2)), "elimination order is not 3/2");
  const ValidatedArc a = validate_arc(load_arc(corpus + "/cusp_arc.json"), p);
  const ContactResult c = contact_order(a);
  o.require(c.r == RationalOrder(Rational(3)), "r = " + c.r.to_string());
  o.require(c.rho == 3, "rho = " + std::to_string(c.rho));
  const NashSequence n = nash_sequence(p.hypersurfaces()[0].polynomial(), a.arc);
  o.require(n.multiplicities == std::vector<std::uint64_t>{2, 2, 2, 1}, "unexpected Nash multiplicities");
  o.require(n.rho == floor_u(c.r), "Nash rho differs from floor(r)");
  if (o.pass) o.detail = "ord 3/2, r 3, rho 3, Nash [2,2,2,1]";
  return o;
}

Outcome a_n_family() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const std::string name = "A_" + std::to_string(n);
    const LocalPresentation p = load_presentation(corpus + "/" + name + ".json");
    const Rational expected = make_rational(n + 1, 2);
    o.require(presentation_elimination_order(p) == RationalOrder(expected), name + ": elimination order");
    const GenericArc g = construct_generic_arc(p, 1, 8, 64);
    o.require(g.lift.e == (n % 2 == 0 ? 2u : 1u), name + ": ramification " + std::to_string(g.lift.e));
    const ContactResult c = contact_order(g.lift.arc);
    o.require(c.r_bar == expected, name + ": r_bar = " + to_string(c.r_bar));
    rho_is_floor(o, g.lift.arc, name + " generic arc");
    rho_is_floor(o, validate_arc(reparametrize_arc(g.lift.arc.arc, 2), p), name + " reparametrized arc");
  }
  if (o.pass) o.detail = "8 presentations";
  return o;
}

Outcome umbrella() {
  Outcome o;
  const LocalPresentation p = load_presentation(corpus + "/umbrella.json");
  const Rational ord = make_rational(3, 2);
  o.require(presentation_elimination_order(p) == RationalOrder(ord), "elimination order is not 3/2");
  const GenericArc g = construct_generic_arc(p, 1, 8, 64);
  o.require(contact_order(g.lift.arc).r_bar == ord, "generic arc misses 3/2");

  VerifyOptions opt;
  opt.trials = 20;
  opt.seed = 7;
  const VerifyResult v = verify_presentation(p, opt);
  std::size_t arcs = 0;
  for (const auto& s : v.samples) {
    if (s.index == 0) continue;
    ++arcs;
    const std::uint64_t closed = floor_u(s.contact.r);
    o.require(s.contact.r_bar >= ord, s.recipe + ": r_bar = " + to_string(s.contact.r_bar));
    o.require(s.contact.rho == closed && s.onedim_rho == closed && s.nash_rho == closed,
              s.recipe + ": rho values disagree");
  }
  o.require(arcs == 20, "sampled " + std::to_string(arcs) + " arcs");
  const ValidatedArc fixed = validate_arc(load_arc(corpus + "/umbrella_arc.json"), p);
  rho_is_floor(o, fixed, "umbrella_arc.json");
  o.require(contact_order(fixed).r_bar >= ord, "umbrella_arc.json below 3/2");
  if (o.pass) o.detail = std::to_string(arcs) + " sampled arcs plus the corpus arc";
  return o;
}

Outcome identity_suites() {
  Outcome o;
  const std::vector<std::pair<std::string, std::function<identities::SuiteResult()>>> suites = {
      {"(a) contact without x", [] { return identities::contact_without_x_suite(200, 11); }},
      {"(b) diagonal bound", [] { return identities::diagonal_bound_suite(200, 12); }},
      {"(c) one-dimensional steps", [] { return identities::onedim_steps_suite(200, 13); }},
      {"(d) Tschirnhausen", [] { return identities::tschirnhausen_suite(200, 14); }},
  };
  std::ostringstream counts;
  for (const auto& [name, run] : suites) {
    const identities::SuiteResult r = run();
    o.require(r.ok(200), name + ": " + r.witness);
    counts << (counts.tellp() > 0 ? "; " : "") << name << " " << r.instances;
  }
  if (o.pass) o.detail = counts.str();
  return o;
}

Outcome two_hypersurfaces() {
  Outcome o;
  const LocalPresentation p = load_presentation(corpus + "/two_hypersurfaces.json");
  const std::vector<Arc> arcs = {
      exact_arc({{"x1", "t^3"}, {"x2", "t^3"}, {"z1", "t^2"}, {"z2", "t^2"}}),
      exact_arc({{"x1", "t^3"}, {"x2", "t^2"}, {"z1", "t^2"}, {"z2", "t"}}),
      exact_arc({{"x1", "t^6"}, {"x2", "t^5"}, {"z1", "t^4"}, {"z2", "t^3"}}),
      exact_arc({{"x1", "-t^3"}, {"x2", "-t^4"}, {"z1", "t^2"}, {"z2", "-t^3"}}),
  };
  for (const auto& arc : arcs) {
    const ValidatedArc a = validate_arc(arc, p);
    const ContactResult c = contact_order(a);
    const auto per = contact_orders_per_hypersurface(a);
    const PresentationNash n = nash_sequence_presentation(a);
    std::optional<RationalOrder> min_r;
    std::optional<std::uint64_t> min_rho;
    for (std::size_t i = 0; i < per.size(); ++i) {
      if (!per[i]) continue;
      min_r = min_r ? min(*min_r, per[i]->r) : per[i]->r;
      if (n.per_hypersurface[i]) min_rho = min_rho ? std::min(*min_rho, n.per_hypersurface[i]->rho) : n.per_hypersurface[i]->rho;
    }
    const std::string label = arc_to_json(arc).dump();
    o.require(min_r && c.r == *min_r, label + ": r_X differs from min r_i");
    o.require(min_rho && n.rho == *min_rho && n.rho == c.rho, label + ": rho_X differs from min rho_i");
  }
  const RationalOrder full = algebra_order_at_origin(presentation_ambient_algebra(p));
  o.require(full == RationalOrder(Rational(1)), "full algebra order = " + full.to_string());
  if (o.pass) o.detail = std::to_string(arcs.size()) + " arcs, full order 1";
  return o;
}

Outcome verify_corpus() {
  Outcome o;
  std::vector<std::string> args = {"verify", corpus + "/cusp.json"};
  for (int n = 1; n <= 8; ++n) args.push_back(corpus + "/A_" + std::to_string(n) + ".json");
  args.push_back(corpus + "/umbrella.json");
  args.push_back(corpus + "/two_hypersurfaces.json");
  for (const char* a : {"--trials", "20", "--seed", "7"}) args.emplace_back(a);
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  std::size_t passes = 0;
  std::istringstream lines(out.str());
  for (std::string line; std::getline(lines, line);)
    if (line.rfind("PASS", 0) == 0) ++passes;
  o.require(code == 0, "exit code " + std::to_string(code) + ": " + err.str());
  o.require(out.str().find("FAIL") == std::string::npos, "a verify check failed");
  if (o.pass) o.detail = "exit 0, " + std::to_string(passes) + " checks passed";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "cusp end to end", 1.0, cusp_end_to_end},
      {2, "A_n family, n = 1..8", 5.0, a_n_family},
      {3, "Whitney umbrella", 5.0, umbrella},
      {4, "randomized identity suites, 200 instances each", 30.0, identity_suites},
      {5, "two separated hypersurfaces", 5.0, two_hypersurfaces},
      {6, "verify on the full corpus, --trials 20 --seed 7", 60.0, verify_corpus},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs >= c.budget_s) {
      o.pass = false;
      o.detail = "over the time budget";
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.3fs / %.0fs", secs, c.budget_s);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ") "
              << o.detail << "\n";
    if (!o.pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
