#include <random>

#include "nashres/error.hpp"
#include "nashres/rees.hpp"
#include "support.hpp"

using namespace nashres;
using namespace testing;

namespace {

ReesAlgebra algebra(const std::vector<std::string>& vars, const std::vector<std::pair<std::string, std::uint32_t>>& gens) {
  ReesAlgebra g(vars);
  for (const auto& [f, w] : gens) g.add(P(f).with_variables(merge_variables(vars, P(f).variables())), w);
  return g;
}

const std::vector<std::string> XZ = {"x", "z"};

}  // namespace

TEST_CASE("odot is the generator union") {
  const ReesAlgebra a = algebra(XZ, {{"x", 1}});
  const ReesAlgebra b = algebra(XZ, {{"z^3", 2}});
  CHECK(odot(a, b).to_string() == "[xW, z^3W^2]");
  CHECK(odot(a, a).same_generators(a));
  const ReesAlgebra only_x = algebra({"x"}, {{"x", 1}});
  const ReesAlgebra z = algebra(XZ, {{"z", 1}});
  const ReesAlgebra u = odot(only_x, z);
  CHECK(u.ambient_vars() == XZ);
  CHECK(u.to_string() == "[xW, zW]");
}

TEST_CASE("odot is commutative and associative") {
  const ReesAlgebra a = algebra(XZ, {{"x^2 - z^3", 2}});
  const ReesAlgebra b = algebra(XZ, {{"z^2", 1}, {"x", 1}});
  const ReesAlgebra c = algebra(XZ, {{"x*z", 2}});
  CHECK(odot(a, b).same_generators(odot(b, a)));
  CHECK(odot(odot(a, b), c).same_generators(odot(a, odot(b, c))));
}

TEST_CASE("diff closure") {
  const ReesAlgebra cusp = diff_closure(algebra(XZ, {{"x^2 - z^3", 2}}));
  CHECK(cusp.same_generators(algebra(XZ, {{"x^2 - z^3", 2}, {"x", 1}, {"z^2", 1}, {"z^3", 2}})));
  CHECK(cusp.diff_closed());
  CHECK(diff_closure(algebra(XZ, {{"x", 1}})).to_string() == "[xW]");
  const std::vector<std::string> Z2 = {"z1", "z2"};
  CHECK(diff_closure(algebra(Z2, {{"z1^2*z2", 2}}))
            .same_generators(algebra(Z2, {{"z1^2*z2", 2}, {"z1*z2", 1}, {"z1^2", 1}})));
}

TEST_CASE("diff closure is idempotent and extensive") {
  std::mt19937 rng(2);
  std::uniform_int_distribution<int> coef(-2, 2), ex(0, 3), w(1, 3);
  for (int trial = 0; trial < 40; ++trial) {
    ReesAlgebra g(XZ);
    for (int k = 0; k < 2; ++k) {
      MultiPoly f(XZ);
      for (int j = 0; j < 3; ++j)
        f = f + Q(coef(rng)) * P("x").pow(ex(rng)).with_variables(XZ) * P("z").pow(ex(rng) + 1);
      g.add(f, static_cast<std::uint32_t>(w(rng)));
    }
    const ReesAlgebra c = diff_closure(g);
    for (const auto& gen : g.generators()) CHECK(c.contains(gen.f, gen.weight));
    CHECK(diff_closure(c).same_generators(c));
    const Point origin{Q(0), Q(0)};
    if (sing_contains(g, origin)) CHECK_FALSE(algebra_order_at(g, origin) < algebra_order_at(c, origin));
  }
}

TEST_CASE("order of an algebra") {
  CHECK(algebra_order_at_origin(algebra(XZ, {{"x", 1}, {"z^3", 2}})) == RO(1));
  CHECK(algebra_order_at_origin(algebra({"z"}, {{"z^3", 2}})) == RO(3, 2));
  CHECK(algebra_order_at_origin(ReesAlgebra(XZ)).is_infinite());
  CHECK(minimizing_generators(algebra(XZ, {{"x", 1}, {"z^3", 2}}), {Q(0), Q(0)}) == std::vector<std::size_t>{0});
}

TEST_CASE("singular locus") {
  const ReesAlgebra g = algebra(XZ, {{"x^2 - z^3", 2}});
  CHECK(sing_contains(g, {Q(0), Q(0)}));
  CHECK_FALSE(sing_contains(g, {Q(1), Q(1)}));
  CHECK(sing_contains(algebra(XZ, {{"x", 1}}), {Q(0), Q(7)}));
}

TEST_SUITE("one-dimensional algebras") {
  TEST_CASE("transform law") {
    CHECK(onedim_transform(OneDimAlgebra::from_pairs({{3, 1}})) == OneDimAlgebra::from_pairs({{2, 1}}));
    CHECK(onedim_transform(OneDimAlgebra::from_pairs({{6, 2}, {4, 1}})) ==
          OneDimAlgebra::from_pairs({{4, 2}, {3, 1}}));
    CHECK_THROWS_WITH_AS(onedim_transform(OneDimAlgebra::from_pairs({{1, 2}})), doctest::Contains("not permissible"),
                         ValidationError);
  }

  TEST_CASE("resolution steps") {
    CHECK(onedim_resolution_steps(OneDimAlgebra::from_pairs({{3, 1}})) == 3);
    CHECK(onedim_resolution_steps(OneDimAlgebra::from_pairs({{7, 2}})) == 3);
    CHECK(onedim_resolution_steps(OneDimAlgebra::from_pairs({{2, 2}})) == 1);
    CHECK(onedim_resolution_steps(OneDimAlgebra::from_pairs({{1, 2}})) == 0);
  }

  TEST_CASE("censored entries") {
    OneDimAlgebra a;
    a.generators = {{ExtOrder::exact(3), 1}, {ExtOrder::at_least(10), 2}};
    CHECK(onedim_order(a, "test").value == RO(3));
    CHECK(onedim_resolution_steps(a) == 3);
    a.generators = {{ExtOrder::exact(6), 1}, {ExtOrder::at_least(10), 2}};
    CHECK_THROWS_AS(onedim_order(a, "test"), PrecisionError);
    a.generators = {{ExtOrder::at_least(4), 1}};
    CHECK_THROWS_AS(onedim_order(a, "test"), PrecisionError);
  }

  TEST_CASE("steps equal the floor of the order") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> a(0, 40), l(1, 8), n(1, 4);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<std::pair<std::uint64_t, std::uint32_t>> pairs;
      const int k = n(rng);
      for (int j = 0; j < k; ++j) pairs.emplace_back(a(rng), l(rng));
      const OneDimAlgebra alg = OneDimAlgebra::from_pairs(pairs);
      const Rational m = onedim_order(alg, "test").value.value();
      CHECK(onedim_resolution_steps(alg) == static_cast<std::uint64_t>(to_int64(floor_of(m))));
    }
  }
}
