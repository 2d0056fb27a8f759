#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "aligncorr/errors.hpp"
#include "aligncorr/monomial_ideal.hpp"
#include "aligncorr/scalar.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;

namespace {
Monomial mono(const char* s) { return parse_monomial(s, 2); }
MonomialIdeal ideal(const char* s, std::size_t n = 2) { return parse_ideal(s, n); }
}  // namespace

TEST_CASE("divisibility") {
  CHECK(divides(mono("x1"), mono("x1*x2")));
  CHECK_FALSE(divides(mono("x1^2"), mono("x1")));
  CHECK(divides(mono("x2^3"), mono("x2^3")));
  CHECK_THROWS_AS(divides(mono("x1"), parse_monomial("x1", 3)), DimensionMismatch);
}

TEST_CASE("membership") {
  CHECK(ideal("[x1, x2^2]").contains(mono("x1*x2")));
  CHECK_FALSE(ideal("[x1, x2^4]").contains(mono("x2^3")));
  CHECK(ideal("[x1^2, x1*x2^2, x2^4]").contains(mono("x1^2")));
}

TEST_CASE("generators are minimalized") {
  const MonomialIdeal I(2, {mono("x1^2"), mono("x1"), mono("x2^2")});
  CHECK(I == ideal("[x1, x2^2]"));
}

TEST_CASE("colon ideals") {
  CHECK(colon(ideal("[x1, x2^2]"), mono("x2")) == ideal("[x1, x2]"));
  CHECK(colon(ideal("[x1, x2^4]"), mono("x1")).is_unit());
  CHECK(colon(ideal("[x1^2, x1*x2^2, x2^4]"), mono("x2^2")) == ideal("[x1, x2^2]"));
}

TEST_CASE("sum, product, intersection") {
  CHECK(product(ideal("[x1]"), ideal("[x1]")) == ideal("[x1^2]"));
  CHECK(intersection(ideal("[x1, x2^4]"), ideal("[x1, x2^2]")) == ideal("[x1, x2^4]"));
  CHECK(product(ideal("[x1, x2^2]"), ideal("[x1, x2^2]")) == ideal("[x1^2, x1*x2^2, x2^4]"));
  CHECK(sum(ideal("[x1^2]"), ideal("[x2]")) == ideal("[x1^2, x2]"));
  CHECK(power(ideal("[x1, x2]"), 2) == MonomialIdeal::maximal_power(2, 2));
}

TEST_CASE("frobenius powers") {
  CHECK(frobenius_power(ideal("[x1, x2]"), 2, 1) == ideal("[x1^2, x2^2]"));
  CHECK(frobenius_power(ideal("[x1^2, x1*x2]"), 5, 0) == ideal("[x1^2, x1*x2]"));
  CHECK(frobenius_power(ideal("[x1, x2^3]"), 3, 1) == ideal("[x1^3, x2^9]"));
}

TEST_CASE("colength and nilpotency") {
  CHECK(colength(ideal("[x1, x2^2]")) == 2);
  CHECK(colength(ideal("[x1, x2^4]")) == 4);
  CHECK(colength(ideal("[x1^2, x1*x2, x2^3]")) == 4);
  CHECK(nilpotency_index(ideal("[x1, x2^2]")) == 2);
  CHECK(nilpotency_index(ideal("[x1^2, x2^2]")) == 3);
  CHECK(nilpotency_index(MonomialIdeal::maximal(2)) == 1);
  CHECK_THROWS_AS(colength(ideal("[x1]")), InfiniteColength);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::uint32_t m = 1; m <= 8; ++m) {
      std::vector<Monomial> gens;
      for (std::size_t i = 0; i + 1 < n; ++i) gens.push_back(Monomial::variable(n, i));
      gens.push_back(Monomial::variable(n, n - 1, m));
      CHECK(colength(MonomialIdeal(n, gens)) == m);
    }
  }
}

TEST_CASE("standard monomials start at 1") {
  const auto s = standard_monomials(ideal("[x1^2, x1*x2, x2^3]"));
  REQUIRE(s.size() == 4);
  CHECK(s.front().is_unit());
}

TEST_CASE("exponent types") {
  const auto uniform = WeightVector::uniform(2);
  CHECK(exponent_type(mono("x1^3*x2^2"), 2, uniform).parts == std::vector<std::uint64_t>{1, 2});
  CHECK(exponent_type(mono("x1^3*x2^2"), 0, uniform).parts == std::vector<std::uint64_t>{5});
  CHECK(exponent_type(mono("x2^4"), 2, uniform).parts == std::vector<std::uint64_t>{0, 0, 1});
  CHECK(exponent_type(mono("x1*x2"), 0, WeightVector({1, 3})).parts == std::vector<std::uint64_t>{4});

  const ExponentType s{{1, 2}, 2};
  const ExponentType t{{5}, 2};
  CHECK(exponent_type_leq(s, t));
  CHECK_FALSE(exponent_type_leq(t, s));
  CHECK(exponent_type_leq(t, t));
}

TEST_CASE("colon duality against brute-force membership") {
  std::mt19937_64 rng(7);
  const auto below = monomials_below(2, 6);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) gens.push_back(below[1 + rng() % (below.size() - 1)]);
    const MonomialIdeal I(2, gens);
    const auto& f = below[rng() % below.size()];
    const auto q = colon(I, f);
    for (const auto& g : below) CHECK(q.contains(g) == I.contains(g * f));
  }
}

TEST_CASE("text round trip") {
  const auto seq = parse_ideal_sequence("[x1, x2^4]; [x1, x2^2]");
  REQUIRE(seq.size() == 2);
  CHECK(seq[0].vars() == 2);
  CHECK(format_ideal_sequence(seq) == "[x1, x2^4]; [x1, x2^2]");
  CHECK(parse_ideal_sequence(format_ideal_sequence(seq)) == seq);
  CHECK(format_monomial(Monomial::unit(2)) == "1");
  CHECK_THROWS_AS(parse_ideal("[x1, y]", 2), ParseError);
  CHECK_THROWS_AS(parse_ideal("[x3]", 2), DimensionMismatch);
  CHECK_THROWS_AS(parse_ideal_sequence("[x1]; [x1, x2]", 1), DimensionMismatch);
  CHECK_THROWS_AS(parse_ideal("[x1^]", 2), ParseError);
}

TEST_CASE("scalars") {
  const Scalar half(mpq_class(1, 2));
  CHECK((half + half).is_one());
  CHECK(Scalar(3L, 2) == Scalar(1L, 2));
  CHECK(Scalar(2L, 3).inverse() == Scalar(2L, 3));
  CHECK((Scalar(1L) + Scalar(1L, 2)).is_zero());
  CHECK_THROWS(Scalar(1L, 2) + Scalar(1L, 3));
  CHECK(Scalar(mpq_class(1, 2), 3) == Scalar(2L, 3));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}
