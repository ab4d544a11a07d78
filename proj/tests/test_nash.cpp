#include "nashres/error.hpp"
#include "nashres/nash.hpp"
#include "support.hpp"

using namespace nashres;
using namespace testing;

TEST_CASE("directed blow-ups of the cusp") {
  const NashState s0 = nash_initial_state(P("x^2 - z^3"), make_arc({{"x", "t^3"}, {"z", "t^2"}}));
  CHECK(nash_multiplicity(s0) == 2);

  Point c1;
  const NashState s1 = nash_step(s0, &c1);
  CHECK(s1.g == P("x^2 - t z^3"));
  CHECK(c1 == Point{Q(0), Q(0), Q(0)});
  CHECK(s1.arc.at("x") == S("t^2"));
  CHECK(s1.arc.at("z") == S("t"));

  Point c2;
  const NashState s2 = nash_step(s1, &c2);
  CHECK(c2 == Point{Q(0), Q(1), Q(0)});
  CHECK(s2.g == P("x^2 - t^2 (z + 1)^3"));
  CHECK(s2.arc.at("x") == S("t"));
  CHECK(s2.arc.at("z").is_exact_zero());

  Point c3;
  const NashState s3 = nash_step(s2, &c3);
  CHECK(c3 == Point{Q(1), Q(0), Q(0)});
  CHECK(s3.g == P("x^2 + 2x - 3t z - 3t^2 z^2 - t^3 z^3"));
  CHECK(nash_multiplicity(s3) == 1);
}

TEST_CASE("Nash multiplicity sequences") {
  const NashSequence c = nash_sequence(P("x^2 - z^3"), make_arc({{"x", "t^3"}, {"z", "t^2"}}));
  CHECK(c.multiplicities == std::vector<std::uint64_t>{2, 2, 2, 1});
  CHECK(c.rho == 3);
  CHECK(nash_sequence(P("x^2 - z^3"), make_arc({{"x", "t^6"}, {"z", "t^4"}})).rho == 6);
  const NashSequence u = nash_sequence(P("x^2 - z1^2*z2"), make_arc({{"x", "t^3"}, {"z1", "t^2"}, {"z2", "t^2"}}));
  CHECK(u.multiplicities == std::vector<std::uint64_t>{2, 2, 2, 1});
  CHECK(u.rho == 3);
}

TEST_CASE("trace and residual checks") {
  NashOptions opt;
  opt.record_trace = true;
  opt.check_residual = true;
  const NashSequence c = nash_sequence(P("x^2 - z^3"), make_arc({{"x", "(t + t^2)^3"}, {"z", "(t + t^2)^2"}}, 40), opt);
  REQUIRE(c.trace.size() == c.multiplicities.size());
  for (std::size_t i = 1; i < c.multiplicities.size(); ++i) CHECK(c.multiplicities[i] <= c.multiplicities[i - 1]);
  CHECK(c.trace.front().equation == "x^2 - z^3");
}

TEST_CASE("precision runs out") {
  CHECK_THROWS_AS(nash_sequence(P("x^2 - z^3"), make_arc({{"x", "t^3"}, {"z", "t^2"}}, 3)), PrecisionError);
}

TEST_CASE("equations must pass through the origin and avoid t") {
  CHECK_THROWS_AS(nash_initial_state(P("x^2 - z^3 + 1"), make_arc({{"x", "t"}, {"z", "t"}})), ValidationError);
  CHECK_THROWS_AS(nash_initial_state(P("x^2 - t"), make_arc({{"x", "t"}})), ValidationError);
}

TEST_CASE("presentations take the minimum") {
  const ValidatedArc a =
      validate_arc(make_arc({{"x1", "t^3"}, {"x2", "t^3"}, {"z1", "t^2"}, {"z2", "t^2"}}), two_hypersurfaces());
  const PresentationNash pn = nash_sequence_presentation(a);
  REQUIRE(pn.per_hypersurface.size() == 2);
  CHECK(pn.rho == std::min(pn.per_hypersurface[0]->rho, pn.per_hypersurface[1]->rho));
  CHECK(pn.rho == contact_order(a).rho);

  const ValidatedArc single = validate_arc(make_arc({{"x", "t^3"}, {"z", "t^2"}}), cusp());
  CHECK(nash_sequence_presentation(single).rho == nash_sequence_hypersurface(single, 0).rho);

  const ValidatedArc skew =
      validate_arc(make_arc({{"x1", "t^3"}, {"x2", "t^2"}, {"z1", "t^2"}, {"z2", "t"}}), two_hypersurfaces());
  const PresentationNash ps = nash_sequence_presentation(skew);
  CHECK(ps.per_hypersurface[0]->rho == 3);
  CHECK(ps.per_hypersurface[1]->rho == 2);
  CHECK(ps.rho == 2);
  CHECK(contact_order(skew).rho == 2);

  const ValidatedArc half =
      validate_arc(make_arc({{"x1", "t^3"}, {"x2", "0"}, {"z1", "t^2"}, {"z2", "0"}}), two_hypersurfaces());
  const PresentationNash ph = nash_sequence_presentation(half);
  CHECK_FALSE(ph.per_hypersurface[1].has_value());
  CHECK(ph.rho == 3);
  CHECK_THROWS_AS(nash_sequence_hypersurface(half, 1), ValidationError);
}
