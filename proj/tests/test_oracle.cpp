#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aligncorr/checks.hpp"
#include "aligncorr/errors.hpp"
#include "aligncorr/flags.hpp"
#include "aligncorr/oracle.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;

namespace {
std::vector<MonomialIdeal> seq(const char* s) { return parse_ideal_sequence(s); }
}  // namespace

TEST_CASE("tangent orbit dimension") {
  CHECK(tangent_orbit_dimension(seq("[x1, x2^2]")).dimension == 3);
  CHECK(tangent_orbit_dimension(seq("[x1^2, x2^2]")).dimension == 4);
  CHECK(tangent_orbit_dimension(seq("[x1, x2]")).dimension == 2);
  CHECK(tangent_orbit_dimension(seq("[x1, x2^4]; [x1, x2^2]")).dimension == 5);
}

TEST_CASE("tangent dimension is stable in the cutoff") {
  const auto ideals = seq("[x1^2, x1*x2, x2^3]");
  const auto base = tangent_orbit_dimension(ideals);
  CHECK(tangent_orbit_dimension(ideals, base.cutoff + 1).dimension == base.dimension);
}

TEST_CASE("finite enumeration of images") {
  const auto m = MonomialIdeal::maximal(2);
  CHECK(enumerate_images(0, seq("[x1^2, x2^2]"), 2, 3) == m);
  CHECK(enumerate_images(1, seq("[x1, x2^2]"), 2, 3) == m);
  CHECK(enumerate_images(0, seq("[x1, x2]"), 3, 2) == m);
  CHECK(enumerate_images(0, seq("[x1^2, x2^2]"), 3, 3) == parse_ideal("[x1, x2^2]", 2));
  CHECK_THROWS_AS(enumerate_images(0, seq("[x1^2, x2^2]"), 2, 2), CutoffTooSmall);
  CHECK_THROWS_AS(enumerate_images(0, seq("[x1^2, x2^2, x3^2]"), 3, 6), SearchSpaceTooLarge);
}

TEST_CASE("enumeration agrees with the elementary test") {
  for (const char* s : {"[x1, x2^4]; [x1, x2^2]", "[x1^2, x1*x2, x2^3]", "[x1^3, x1*x2, x2^2]"}) {
    for (std::uint32_t p : {2u, 3u}) {
      const auto ideals = seq(s);
      const auto a = measuring_sequence(ideals, p);
      for (std::size_t i = 0; i < 2; ++i) {
        CHECK(enumerate_images(i, ideals, p, a.cutoff) ==
              sum(a[i], MonomialIdeal::maximal_power(2, a.cutoff)));
      }
    }
  }
}

TEST_CASE("linear extension counts") {
  const std::vector<std::vector<bool>> chain{{true, true, true}, {false, true, true}, {false, false, true}};
  CHECK(count_linear_extensions(chain) == 1);
  const std::vector<std::vector<bool>> antichain{{true, false, false}, {false, true, false}, {false, false, true}};
  CHECK(count_linear_extensions(antichain) == 6);
  const std::vector<std::vector<bool>> vee{{true, true, true}, {false, true, false}, {false, false, true}};
  CHECK(count_linear_extensions(vee) == 2);
}

TEST_CASE("random ideal sequences are valid") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const auto ideals = random_ideal_sequence(2, 2, 8, seed);
    REQUIRE(ideals.size() == 2);
    for (const auto& I : ideals) {
      CHECK(has_finite_colength(I));
      CHECK(colength(I) <= 8);
    }
  }
}

TEST_CASE("property suite passes on small inputs") {
  for (const char* s : {"[x1, x2^4]; [x1, x2^2]", "[x1^2, x2^2]"}) {
    for (std::uint32_t p : {0u, 2u}) {
      for (const auto& outcome : run_property_suite(seq(s), p, {1, 10})) {
        CAPTURE(outcome.name);
        CAPTURE(outcome.detail);
        CHECK(outcome.passed);
      }
    }
  }
}
