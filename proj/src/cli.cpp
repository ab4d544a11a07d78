#include "nashres/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>

#include "nashres/arcs.hpp"
#include "nashres/error.hpp"
#include "nashres/generic_arc.hpp"
#include "nashres/io.hpp"
#include "nashres/nash.hpp"
#include "nashres/parse.hpp"
#include "nashres/presentation.hpp"
#include "nashres/verify.hpp"

namespace nashres::cli {

namespace {

constexpr int kExitIdentity = 5;

struct Flags {
  bool json = false;
  std::string file;
  std::string arc_file;
  std::vector<std::string> files;
  std::string point;
  std::string poly;
  std::string var = "x";
  bool trace = false;
  std::size_t precision = 64;
  std::uint32_t alpha = 1;
  std::uint32_t search_bound = 8;
  std::size_t trials = 20;
  std::uint64_t seed = 0;
};

struct Report {
  std::string command;
  Json inputs = Json::object();
  Json results = Json::object();
  Json checks = Json::array();
  std::optional<std::uint64_t> seed;
  std::vector<std::string> lines;
  bool failed = false;

  void check(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back({{"name", name}, {"status", pass ? "pass" : "fail"}, {"witness", witness}});
    lines.push_back(std::string(pass ? "PASS " : "FAIL ") + name + (witness.empty() ? "" : "  [" + witness + "]"));
    failed = failed || !pass;
  }
  void line(const std::string& s) { lines.push_back(s); }
};

Json fraction(const Rational& q) { return fraction_string(q); }
Json order_json(const RationalOrder& o) { return o.fraction_string(); }

Json point_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p) out.push_back(fraction_string(c));
  return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

std::string sequence_text(const std::vector<std::uint64_t>& m) {
  std::vector<std::string> parts;
  for (auto v : m) parts.push_back(std::to_string(v));
  return "[" + join(parts, ", ") + "]";
}

Json contact_json(const ContactResult& c) {
  return {{"r", order_json(c.r)},         {"r_bar", fraction(c.r_bar)},      {"rho", c.rho},
          {"rho_bar", fraction(c.rho_bar)}, {"arc_order", c.arc_order}, {"witness", c.witness}};
}

Json algebra_json(const ReesAlgebra& g) {
  Json gens = Json::array();
  for (const auto& gen : g.generators()) gens.push_back({{"f", gen.f.to_string()}, {"weight", gen.weight}});
  return {{"variables", g.ambient_vars()}, {"generators", gens}, {"text", g.to_string()}};
}

Json tschirnhausen_json(const TschirnhausenHypersurface& h) {
  Json coeffs = Json::array();
  for (const auto& c : h.coeffs) coeffs.push_back(c.to_string());
  return {{"var", h.var},          {"b", h.b},          {"original", h.original.to_string()},
          {"normalized", h.to_string()}, {"shift", h.shift.to_string()}, {"coefficients", coeffs}};
}

Json certificates_json(const ValidatedArc& va) {
  Json out = Json::array();
  for (const auto& c : va.certificates) out.push_back(c.to_string());
  return out;
}

void cmd_mult(const Flags& f, Report& rep) {
  const LocalPresentation p = load_presentation(f.file);
  rep.inputs["presentation"] = presentation_to_json(p);
  const auto& vars = p.ambient_vars();
  Point pt(vars.size(), Rational(0));
  if (!f.point.empty()) {
    pt = parse_point(f.point);
    if (pt.size() != vars.size())
      throw ValidationError("point has " + std::to_string(pt.size()) + " coordinates; expected " +
                            std::to_string(vars.size()) + " (" + join(vars, ", ") + ")");
  }
  rep.inputs["point"] = point_json(pt);
  rep.inputs["variables"] = vars;
  Json hyps = Json::array();
  for (const auto& h : p.hypersurfaces()) {
    const std::uint64_t m = hypersurface_multiplicity_at(h, pt);
    hyps.push_back({{"var", h.var}, {"f", h.original.to_string()}, {"b", h.b}, {"multiplicity", m}});
    rep.line("mult(" + h.original.to_string() + ") = " + std::to_string(m) + " (b = " + std::to_string(h.b) + ")");
  }
  const bool in_max = max_mult_contains(p, pt);
  rep.results["hypersurfaces"] = hyps;
  rep.results["in_max_mult"] = in_max;
  rep.line(std::string("point ") + (in_max ? "is" : "is not") + " in Max mult");
}

void cmd_tsch(const Flags& f, Report& rep) {
  Json hyps = Json::array();
  auto emit = [&](const TschirnhausenHypersurface& h) {
    hyps.push_back(tschirnhausen_json(h));
    rep.line(h.original.to_string() + "  ->  " + h.to_string() + "   (" + h.var + "~ = " + h.var + " + " +
             "(" + h.shift.to_string() + "))");
    rep.check("no " + h.var + "^" + std::to_string(h.b - 1) + " term",
              h.b < 2 || h.polynomial().coefficient_in(h.var, h.b - 1).is_zero(), h.to_string());
  };
  if (!f.poly.empty()) {
    const MultiPoly poly = parse_poly(f.poly);
    rep.inputs["poly"] = poly.to_string();
    rep.inputs["var"] = f.var;
    emit(tschirnhausen_normalize(poly, f.var));
  } else {
    const LocalPresentation p = load_presentation(f.file);
    rep.inputs["presentation"] = presentation_to_json(p);
    for (const auto& h : p.hypersurfaces()) emit(h);
  }
  rep.results["hypersurfaces"] = hyps;
}

void cmd_elim(const Flags& f, Report& rep) {
  const LocalPresentation p = load_presentation(f.file);
  rep.inputs["presentation"] = presentation_to_json(p);
  Json hyps = Json::array();
  for (const auto& h : p.hypersurfaces()) {
    const ReesAlgebra g = elimination_algebra(h);
    const RationalOrder o = elimination_order(h);
    hyps.push_back({{"var", h.var}, {"normalized", h.to_string()}, {"algebra", algebra_json(g)},
                    {"order", order_json(o)}});
    rep.line("G(" + h.to_string() + ") = " + g.to_string());
    rep.line("  order at origin = " + o.to_string());
  }
  const RationalOrder ord = presentation_elimination_order(p);
  const ReesAlgebra ambient = presentation_ambient_algebra(p);
  const RationalOrder full = algebra_order_at_origin(ambient);
  rep.results["hypersurfaces"] = hyps;
  rep.results["elimination_order"] = order_json(ord);
  rep.results["ambient_algebra"] = algebra_json(ambient);
  rep.results["ambient_order"] = order_json(full);
  rep.line("ord^(" + std::to_string(p.d()) + ") = " + ord.to_string());
  rep.check("full algebra has order 1 at the origin", full == RationalOrder(Rational(1)), full.to_string());
}

ValidatedArc load_validated(const Flags& f, const LocalPresentation& p, Report& rep) {
  const Arc a = load_arc(f.arc_file);
  rep.inputs["presentation"] = presentation_to_json(p);
  rep.inputs["arc"] = arc_to_json(a);
  return validate_arc(a, p);
}

void cmd_contact(const Flags& f, Report& rep) {
  const LocalPresentation p = load_presentation(f.file);
  const ValidatedArc va = load_validated(f, p, rep);
  const ContactResult c = contact_order(va);
  const RationalOrder wx = contact_order_without_x(va);
  Json per = Json::array();
  RationalOrder min_r;
  for (const auto& ci : contact_orders_per_hypersurface(va)) {
    per.push_back(ci ? contact_json(*ci) : Json(nullptr));
    if (ci) min_r = min(min_r, ci->r);
  }
  rep.results["contact"] = contact_json(c);
  rep.results["r_without_x"] = order_json(wx);
  rep.results["per_hypersurface"] = per;
  rep.results["certificates"] = certificates_json(va);
  rep.line("r = " + c.r.to_string() + ", r_bar = " + to_string(c.r_bar) + ", rho = " + std::to_string(c.rho) +
           ", rho_bar = " + to_string(c.rho_bar) + ", ord(arc) = " + std::to_string(c.arc_order));
  rep.line("attained by " + c.witness);
  rep.check("contact order is independent of x", c.r == wx, wx.to_string());
  rep.check("r is the minimum over the hypersurfaces", c.r == min_r, min_r.to_string());
}

void cmd_nash(const Flags& f, Report& rep) {
  const LocalPresentation p = load_presentation(f.file);
  const ValidatedArc va = load_validated(f, p, rep);
  NashOptions opt;
  opt.record_trace = f.trace;
  opt.check_residual = true;
  const PresentationNash pn = nash_sequence_presentation(va, opt);
  const ContactResult c = contact_order(va);
  Json per = Json::array();
  for (std::size_t i = 0; i < pn.per_hypersurface.size(); ++i) {
    const auto& s = pn.per_hypersurface[i];
    const auto& h = p.hypersurfaces()[i];
    if (!s) {
      per.push_back(nullptr);
      rep.line(h.original.to_string() + ": factored arc inside Max mult");
      continue;
    }
    Json entry = {{"var", h.var}, {"multiplicities", s->multiplicities}, {"rho", s->rho},
                  {"precision_consumed", s->precision_consumed}};
    if (f.trace) {
      Json tr = Json::array();
      for (const auto& r : s->trace)
        tr.push_back({{"step", r.step}, {"center", point_json(r.center)}, {"multiplicity", r.multiplicity},
                      {"equation", r.equation}});
      entry["variables"] = s->variables;
      entry["trace"] = tr;
    }
    per.push_back(entry);
    rep.line(h.original.to_string() + ": Nash multiplicities " + sequence_text(s->multiplicities) +
             ", rho = " + std::to_string(s->rho));
    if (f.trace)
      for (const auto& r : s->trace) {
        std::vector<std::string> center;
        for (const auto& v : r.center) center.push_back(to_string(v));
        rep.line("  step " + std::to_string(r.step) + ": center (" + join(center, ", ") + "), mult " +
                 std::to_string(r.multiplicity) + ", " + r.equation);
      }
  }
  rep.results["rho"] = pn.rho;
  rep.results["per_hypersurface"] = per;
  rep.results["contact"] = contact_json(c);
  rep.line("rho = " + std::to_string(pn.rho) + ", floor(r) = " + std::to_string(c.rho));
  rep.check("rho = floor(r)", pn.rho == c.rho, "r = " + c.r.to_string());
}

void cmd_generic(const Flags& f, Report& rep) {
  const LocalPresentation p = load_presentation(f.file);
  rep.inputs["presentation"] = presentation_to_json(p);
  rep.inputs["alpha"] = f.alpha;
  rep.inputs["search_bound"] = f.search_bound;
  rep.inputs["precision"] = f.precision;
  const GenericArc g = construct_generic_arc(p, f.alpha, f.search_bound, f.precision);
  const ContactResult c = contact_order(g.lift.arc);
  const GenericityReport gr = verify_genericity(g.lift.arc, p);
  Json units = Json::array();
  for (const auto& u : g.base.units) units.push_back(fraction_string(u));
  Json entries = Json::array();
  for (const auto& e : g.certificate.entries)
    entries.push_back({{"image", order_json(e.image)}, {"expected", order_json(e.expected)},
                       {"witness", e.witness}, {"holds", e.holds}});
  rep.results["units"] = units;
  rep.results["alpha"] = g.base.alpha;
  rep.results["tuples_tried"] = g.tuples_tried;
  rep.results["ramification"] = g.lift.e;
  rep.results["ramifications"] = g.lift.ramifications;
  rep.results["arc"] = arc_to_json(g.lift.arc.arc);
  rep.results["contact"] = contact_json(c);
  rep.results["elimination_order"] = order_json(gr.elimination_order);
  rep.results["certificate"] = entries;

  std::vector<std::string> us;
  for (const auto& u : g.base.units) us.push_back(to_string(u));
  rep.line("units (" + join(us, ", ") + "), alpha = " + std::to_string(g.base.alpha) +
           ", ramification e = " + std::to_string(g.lift.e));
  rep.line("arc " + g.lift.arc.arc.to_string());
  rep.line("r_bar = " + to_string(c.r_bar) + ", ord^(" + std::to_string(p.d()) +
           ") = " + gr.elimination_order.to_string());
  rep.check("diagonal genericity certificate", g.certificate.holds(), gr.witness);
  rep.check("r_bar equals the elimination order", gr.generic, "r_bar = " + to_string(gr.r_bar));
  rep.check("arc order equals base order", gr.order_identity,
            std::to_string(gr.arc_order) + " = " + std::to_string(gr.base_order));
  rep.check("tau guard", gr.tau_guard, "");
}

void cmd_verify(const Flags& f, Report& rep) {
  VerifyOptions opt;
  opt.trials = f.trials;
  opt.seed = f.seed;
  opt.precision = f.precision;
  opt.search_bound = f.search_bound;
  opt.alpha = f.alpha;
  rep.seed = f.seed;
  rep.inputs["files"] = f.files;
  rep.inputs["trials"] = f.trials;
  rep.inputs["precision"] = f.precision;
  rep.inputs["search_bound"] = f.search_bound;
  rep.inputs["alpha"] = f.alpha;
  Json per = Json::array();
  for (const auto& file : f.files) {
    const LocalPresentation p = load_presentation(file);
    const VerifyResult v = verify_presentation(p, opt);
    Json samples = Json::array();
    for (const auto& s : v.samples)
      samples.push_back({{"index", s.index},
                         {"kind", s.kind},
                         {"recipe", s.recipe},
                         {"arc", arc_to_json(s.arc)},
                         {"contact", contact_json(s.contact)},
                         {"onedim_rho", s.onedim_rho},
                         {"nash_rho", s.nash_rho}});
    Json units = Json::array();
    for (const auto& u : v.generic_base.units) units.push_back(fraction_string(u));
    per.push_back({{"file", file},
                   {"presentation", presentation_to_json(p)},
                   {"elimination_order", order_json(v.elimination_order)},
                   {"generic_arc",
                    {{"units", units},
                     {"ramification", v.generic_e},
                     {"arc", arc_to_json(v.generic_arc)},
                     {"contact", contact_json(v.generic_contact)}}},
                   {"reparametrized", {{"e", v.rho_bar_reparam}, {"contact", contact_json(v.reparam_contact)}}},
                   {"resamples", v.resamples},
                   {"samples", samples}});
    rep.line(file + ": ord^(" + std::to_string(p.d()) + ") = " + v.elimination_order.to_string() + ", " +
             std::to_string(v.samples.size()) + " arcs");
    for (const auto& c : v.checks) rep.check(file + ": " + c.name, c.pass, c.witness);
  }
  rep.results["presentations"] = per;
}

void print(const Report& rep, const Flags& f, long long elapsed_ms, std::ostream& out) {
  if (f.json) {
    Json j;
    j["command"] = rep.command;
    j["inputs"] = rep.inputs;
    j["results"] = rep.results;
    j["checks"] = rep.checks;
    j["seed"] = rep.seed ? Json(*rep.seed) : Json(nullptr);
    j["elapsed_ms"] = elapsed_ms;
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& l : rep.lines) out << l << '\n';
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse:
    case ErrorKind::Validation:
      return 2;
    case ErrorKind::InsufficientPrecision:
      return 3;
    case ErrorKind::ExtensionRequired:
      return 4;
    case ErrorKind::IdentityViolation:
      return kExitIdentity;
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Exact invariants of singular points: elimination orders, arc contact, Nash multiplicity", "nashres"};
  app.require_subcommand(1);
  app.add_flag("--json", f.json, "Emit a JSON report");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", f.json, "Emit a JSON report"); };

  auto* mult = app.add_subcommand("mult", "Multiplicity of each hypersurface at a point");
  mult->add_option("file", f.file, "Presentation JSON")->required()->check(CLI::ExistingFile);
  mult->add_option("--point", f.point, "Comma-separated rational coordinates in ambient order");
  add_json(mult);

  auto* tsch = app.add_subcommand("tsch", "Tschirnhausen normal form");
  auto* tsch_file = tsch->add_option("file", f.file, "Presentation JSON")->check(CLI::ExistingFile);
  auto* tsch_poly = tsch->add_option("--poly", f.poly, "Polynomial text");
  tsch->add_option("--var", f.var, "Distinguished variable")->capture_default_str()->needs(tsch_poly);
  tsch_file->excludes(tsch_poly);
  add_json(tsch);

  auto* elim = app.add_subcommand("elim", "Elimination algebras and their orders");
  elim->add_option("file", f.file, "Presentation JSON")->required()->check(CLI::ExistingFile);
  add_json(elim);

  auto* contact = app.add_subcommand("contact", "Order of contact of an arc");
  contact->add_option("file", f.file, "Presentation JSON")->required()->check(CLI::ExistingFile);
  contact->add_option("arc", f.arc_file, "Arc JSON")->required()->check(CLI::ExistingFile);
  add_json(contact);

  auto* nash = app.add_subcommand("nash", "Nash multiplicity sequence along an arc");
  nash->add_option("file", f.file, "Presentation JSON")->required()->check(CLI::ExistingFile);
  nash->add_option("arc", f.arc_file, "Arc JSON")->required()->check(CLI::ExistingFile);
  nash->add_flag("--trace", f.trace, "Record every blow-up step");
  add_json(nash);

  auto* generic = app.add_subcommand("generic-arc", "Construct an arc attaining the elimination order");
  generic->add_option("file", f.file, "Presentation JSON")->required()->check(CLI::ExistingFile);
  generic->add_option("--alpha", f.alpha, "Exponent of the diagonal base arc")->capture_default_str()->check(
      CLI::PositiveNumber);
  generic->add_option("--search-bound", f.search_bound, "Largest |u_j| tried")->capture_default_str()->check(
      CLI::PositiveNumber);
  generic->add_option("--precision", f.precision, "Series precision")->capture_default_str()->check(
      CLI::PositiveNumber);
  add_json(generic);

  auto* verify = app.add_subcommand("verify", "Check the order identities on sampled arcs");
  verify->add_option("files", f.files, "Presentation JSON files")->required()->check(CLI::ExistingFile);
  verify->add_option("--trials", f.trials, "Sampled arcs per presentation")->capture_default_str();
  verify->add_option("--seed", f.seed, "Sampling seed")->capture_default_str();
  verify->add_option("--precision", f.precision, "Series precision")->capture_default_str()->check(
      CLI::PositiveNumber);
  verify->add_option("--search-bound", f.search_bound, "Largest |u_j| tried")->capture_default_str()->check(
      CLI::PositiveNumber);
  verify->add_option("--alpha", f.alpha, "Exponent of the diagonal base arc")->capture_default_str()->check(
      CLI::PositiveNumber);
  add_json(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (tsch->parsed() && f.file.empty() && f.poly.empty()) {
    err << "error: tsch needs a presentation file or --poly\n";
    return 2;
  }

  Report rep;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (mult->parsed()) {
      rep.command = "mult";
      cmd_mult(f, rep);
    } else if (tsch->parsed()) {
      rep.command = "tsch";
      cmd_tsch(f, rep);
    } else if (elim->parsed()) {
      rep.command = "elim";
      cmd_elim(f, rep);
    } else if (contact->parsed()) {
      rep.command = "contact";
      cmd_contact(f, rep);
    } else if (nash->parsed()) {
      rep.command = "nash";
      cmd_nash(f, rep);
    } else if (generic->parsed()) {
      rep.command = "generic-arc";
      cmd_generic(f, rep);
    } else {
      rep.command = "verify";
      cmd_verify(f, rep);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  const auto elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  print(rep, f, static_cast<long long>(elapsed), out);
  return rep.failed ? kExitIdentity : 0;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace nashres::cli
