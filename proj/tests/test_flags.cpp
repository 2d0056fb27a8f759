#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aligncorr/errors.hpp"
#include "aligncorr/flags.hpp"
#include "aligncorr/oracle.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;

namespace {

MeasuringSequence meas(const char* s, std::uint32_t p = 0) {
  return measuring_sequence(parse_ideal_sequence(s), p);
}

Monomial mono(const char* s, std::size_t n = 2) { return parse_monomial(s, n); }

}  // namespace

TEST_CASE("preorder read off the measuring sequence") {
  const auto pre = preorder_from_measuring(meas("[x1, x2^4]; [x1, x2^2]"));
  CHECK(pre.less(0, 1));
  CHECK_FALSE(pre.leq(1, 0));
  CHECK(pre.classes() == std::vector<std::vector<std::size_t>>{{0}, {1}});

  const auto flat = preorder_from_measuring(meas("[x1, x2]"));
  CHECK(flat.equivalent(0, 1));

  CHECK_THROWS_AS(VariablePreorder({{true, true, false}, {false, true, true}, {false, false, true}}),
                  NonTransitiveRelation);
}

TEST_CASE("flag completions") {
  const auto strict = enumerate_completions(preorder_from_measuring(meas("[x1, x2^4]; [x1, x2^2]")));
  REQUIRE(strict.size() == 1);
  CHECK(strict[0].classes == std::vector<std::vector<std::size_t>>{{0}, {1}});
  const auto B = strict[0].ideals();
  REQUIRE(B.size() == 2);
  CHECK(B[0] == parse_ideal("[x1, x2^2]", 2));
  CHECK(B[1] == MonomialIdeal::maximal(2));

  const auto free = enumerate_completions(preorder_from_measuring(meas("[x1^2, x2^2]")));
  CHECK(free.size() == 2);

  const auto one = enumerate_completions(preorder_from_measuring(meas("[x1, x2]")));
  REQUIRE(one.size() == 1);
  CHECK(one[0].ideals() == std::vector<MonomialIdeal>{MonomialIdeal::maximal(2)});
}

TEST_CASE("completion counts match linear extensions") {
  for (const char* s : {"[x1^2, x2^2, x3^2]", "[x1, x2^2, x3^3]", "[x1, x2^2, x2*x3, x3^2]",
                        "[x1^2, x2^2, x3^2, x4^2]", "[x1, x2^2, x3^2, x4^3]"}) {
    const auto pre = preorder_from_measuring(meas(s));
    CHECK(enumerate_completions(pre).size() == count_linear_extensions(pre.matrix()));
  }
}

TEST_CASE("coordinate sets") {
  const auto a = meas("[x1, x2^4]; [x1, x2^2]");
  const auto flag = enumerate_completions(preorder_from_measuring(a)).front();
  const auto coords = coordinate_set(a, flag);
  REQUIRE(coords.size() == 2);
  CHECK(coords[0] == CoordinatePair{0, mono("x2^2")});
  CHECK(coords[1] == CoordinatePair{0, mono("x2^3")});

  const auto curvilinear = meas("[x1, x2^2]");
  CHECK(coordinate_set(curvilinear, enumerate_completions(preorder_from_measuring(curvilinear)).front())
            .empty());
  const auto m = meas("[x1, x2]");
  CHECK(coordinate_set(m, enumerate_completions(preorder_from_measuring(m)).front()).empty());

  FlagSequence wrong{{{1}, {0}}};
  CHECK_THROWS_AS(coordinate_set(a, wrong), IncompatibleFlag);
}

TEST_CASE("dimension formula pieces") {
  CHECK(total_dimension(parse_ideal_sequence("[x1, x2^2]"), 0) == 3);
  CHECK(total_dimension(parse_ideal_sequence("[x1, x2^4]; [x1, x2^2]"), 0) == 5);
  CHECK(total_dimension(parse_ideal_sequence("[x1^2, x2^2]"), 2) == 2);

  const auto a = meas("[x1, x2^4]; [x1, x2^2]");
  const auto d = fiber_dimension_decomposition(a, enumerate_completions(preorder_from_measuring(a)).front());
  CHECK(d.base == 2);
  CHECK(d.flag_dim == 1);
  CHECK(d.coord_count == 2);

  const auto b = meas("[x1^2, x2^2, x3^2]");
  for (const auto& flag : enumerate_completions(preorder_from_measuring(b))) {
    CHECK(fiber_dimension_decomposition(b, flag).total() == total_dimension(b));
  }
}

TEST_CASE("etale degree") {
  CHECK(etale_degree(parse_ideal_sequence("[x1^2, x2^2]"), 0) == 2);
  CHECK(etale_degree(parse_ideal_sequence("[x1, x2^2]"), 0) == 1);
  CHECK(etale_degree(parse_ideal_sequence("[x1^2, x2^2]"), 2) == 1);
  CHECK(etale_degree(parse_ideal_sequence("[x1^2, x2^2, x3^2]"), 0) == 6);
  CHECK(permute(parse_ideal("[x1, x2^2]", 2), {1, 0}) == parse_ideal("[x2, x1^2]", 2));
}

TEST_CASE("coordinate equivalence") {
  const auto a = meas("[x1, x2^4]; [x1, x2^2]");
  const auto pre = preorder_from_measuring(a);
  const auto coords = coordinate_set(a, enumerate_completions(pre).front());
  CHECK(coordinate_equivalence(coords, pre).size() == 2);

  const auto b = meas("[x1, x2, x3]");
  const auto pb = preorder_from_measuring(b);
  CHECK(monomials_equivalent(mono("x2*x3", 3), mono("x3*x2", 3), pb));
  CHECK(monomials_equivalent(mono("x2^2", 3), mono("x1*x3", 3), pb));
  CHECK_FALSE(monomials_equivalent(mono("x2^2", 3), mono("x2^3", 3), pb));
}

TEST_CASE("parameter names skip t and x") {
  const auto names = parameter_names(24);
  CHECK(names[0] == "a");
  CHECK(names[1] == "b");
  for (const auto& s : names) {
    CHECK(s != "t");
    CHECK(s != "x");
  }
}
