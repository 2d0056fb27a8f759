#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aligncorr/errors.hpp"
#include "aligncorr/fiber.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;

namespace {

struct Example {
  MeasuringSequence a;
  FlagSequence flag;
  PluckerMap map;
};

Example example() {
  auto a = measuring_sequence(parse_ideal_sequence("[x1, x2^4]; [x1, x2^2]"), 0);
  auto flag = enumerate_completions(preorder_from_measuring(a)).front();
  auto map = plucker_map(a, flag);
  return {std::move(a), std::move(flag), std::move(map)};
}

Coefficient param(std::size_t k) { return Coefficient::parameter(k); }

std::vector<std::string> forms(const std::vector<ProjectiveForm>& fs) {
  std::vector<std::string> out;
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

}  // namespace

TEST_CASE("coset parametrization") {
  const auto ex = example();
  const auto g = coset_parametrization(ex.map.coords, 2);
  CHECK(g.image(0) == parse_polynomial("x1 + a*x2^2 + b*x2^3", 2, {"a", "b"}));
  CHECK(g.image(1) == parse_polynomial("x2", 2, {}));
  CHECK(coset_parametrization({}, 2) == Substitution::identity(2));
}

TEST_CASE("quotient frame") {
  const auto ex = example();
  const auto g = coset_parametrization(ex.map.coords, 2);
  const auto frame = quotient_frame(parse_ideal("[x1, x2^4]", 2), g, 4);
  const auto J1 = parse_ideal("[x1, x2^2]", 2);
  CHECK(frame.j1 == J1);
  CHECK(frame.j2 == product(J1, J1));
  std::vector<std::string> basis;
  for (const auto& m : frame.basis) basis.push_back(format_monomial(m));
  CHECK(basis == std::vector<std::string>{"x2^3", "x1*x2", "x2^2", "x1"});
  CHECK_THROWS_AS(quotient_frame(parse_ideal("[x1, x2^4]", 2), g, 3), CutoffTooSmall);
}

TEST_CASE("plucker coordinates in wedge order") {
  const auto ex = example();
  REQUIRE(ex.map.factors.size() == 1);
  const std::vector<Coefficient> expected{-param(1), param(0).pow(2), param(0), param(0),
                                          Coefficient::one(), Coefficient::zero()};
  CHECK(ex.map.coordinates == expected);
  CHECK(ex.map.labels.front() == "[x2^3, x1*x2]");
  CHECK(ex.map.labels.back() == "[x2^2, x1]");
  CHECK(satisfies_plucker_relations(ex.map.factors.front()));
}

TEST_CASE("zero parameters give the point of the ideal itself") {
  const auto ex = example();
  const std::vector<Scalar> zero{Scalar(0L), Scalar(0L)};
  std::size_t nonzero = 0;
  for (const auto& c : ex.map.coordinates) nonzero += c.evaluate(zero).is_zero() ? 0 : 1;
  CHECK(nonzero == 1);
}

TEST_CASE("interpolated equations") {
  const auto ex = example();
  const auto eq = interpolate_image_equations(ex.map, 2, std::nullopt, 1);
  REQUIRE(eq.new_generators.size() == 2);
  CHECK(forms(eq.new_generators[0]) == std::vector<std::string>{"x5", "x2 - x3"});
  CHECK(forms(eq.new_generators[1]) == std::vector<std::string>{"x1*x4 - x2^2"});
  CHECK(eq.dimensions[0] == 2);

  const auto linear = interpolate_image_equations(ex.map, 1, std::nullopt, 5);
  CHECK(forms(linear.new_generators[0]) == std::vector<std::string>{"x5", "x2 - x3"});

  for (const auto& f : eq.bases[1]) CHECK(f.evaluate(ex.map.coordinates).is_zero());
  CHECK_THROWS_AS(interpolate_image_equations(ex.map, 2, 3, 1), InsufficientSamples);
}

TEST_CASE("different seeds give the same equations") {
  const auto ex = example();
  const auto a = interpolate_image_equations(ex.map, 2, std::nullopt, 1);
  const auto b = interpolate_image_equations(ex.map, 2, std::nullopt, 99);
  CHECK(forms(a.new_generators[1]) == forms(b.new_generators[1]));
  CHECK(a.dimensions == b.dimensions);
}

TEST_CASE("toric structure") {
  const auto ex = example();
  const auto report = toric_check(ex.map);
  CHECK(report.independent);
  CHECK(report.all_monomial);
  CHECK(report.homogeneous);
  const auto w = coordinate_weights(ex.map.coords, 2);
  CHECK(w == std::vector<std::vector<long>>{{1, -2}, {1, -3}});

  const auto trivial = measuring_sequence(parse_ideal_sequence("[x1, x2^2]"), 0);
  const auto t = toric_check(plucker_map(trivial, enumerate_completions(preorder_from_measuring(trivial)).front()));
  CHECK(t.independent);
  CHECK(t.all_monomial);
}

TEST_CASE("boundary probe") {
  const auto ex = example();
  const auto eq = interpolate_image_equations(ex.map, 2, std::nullopt, 1);
  const std::vector<std::string> params{"alpha", "beta"};
  const auto results = boundary_probe(
      ex.map, eq, params,
      {{"family", {"x2^3", "alpha*x1*x2 + beta*x2^2"}},
       {"cone", {"x2^3", "x1*x2"}},
       {"affine", {"x1", "x1*x2"}}});
  REQUIRE(results.size() == 3);

  const Coefficient alpha = param(0), beta = param(1);
  CHECK(results[0].point == std::vector<Coefficient>{alpha, beta, Coefficient::zero(), Coefficient::zero(),
                                                     Coefficient::zero(), Coefficient::zero()});
  CHECK(results[0].satisfies_equations);
  CHECK(results[0].off_chart);

  std::vector<Scalar> cone;
  for (const auto& c : results[1].point) cone.push_back(*c.as_constant());
  CHECK(projectively_equal(cone, {Scalar(-1L), 0L, 0L, 0L, 0L, 0L}));
  CHECK(results[1].satisfies_equations);

  CHECK(results[2].satisfies_equations);
  CHECK_FALSE(results[2].off_chart);
}

TEST_CASE("weight homogeneity of coefficients") {
  const std::vector<std::vector<long>> w{{1, -2}, {1, -3}};
  CHECK(is_weight_homogeneous(param(0) * param(0) * param(1), w));
  CHECK_FALSE(is_weight_homogeneous(param(0) + param(1), w));
}

TEST_CASE("characteristic p maps have no interpolation") {
  const auto a = measuring_sequence(parse_ideal_sequence("[x1, x2^4]; [x1, x2^2]"), 3);
  const auto map = plucker_map(a, enumerate_completions(preorder_from_measuring(a)).front());
  CHECK_THROWS_AS(interpolate_image_equations(map, 2, std::nullopt, 1), InputError);
}
