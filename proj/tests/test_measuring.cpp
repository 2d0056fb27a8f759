#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aligncorr/errors.hpp"
#include "aligncorr/measuring.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;

namespace {

std::vector<MonomialIdeal> seq(const char* s) { return parse_ideal_sequence(s); }
MonomialIdeal ideal(const char* s, std::size_t n = 2) { return parse_ideal(s, n); }

}  // namespace

TEST_CASE("measuring sequences in characteristic 0") {
  const auto a = measuring_sequence(seq("[x1, x2^4]; [x1, x2^2]"), 0);
  REQUIRE(a.vars() == 2);
  CHECK(a[0] == ideal("[x1, x2^4]"));
  CHECK(a[1] == ideal("[x1, x2]"));
  CHECK(a.cutoff == 4);

  const auto b = measuring_sequence(seq("[x1^2, x2^2]"), 0);
  CHECK(b[0] == ideal("[x1, x2^2]"));
  CHECK(b[1] == ideal("[x2, x1^2]"));

  const auto m = measuring_sequence(seq("[x1, x2]"), 0);
  CHECK(m[0] == MonomialIdeal::maximal(2));
  CHECK(m[1] == MonomialIdeal::maximal(2));
}

TEST_CASE("frobenius rigidity in characteristic 2") {
  const auto a = measuring_sequence(seq("[x1^2, x2^2]"), 2);
  CHECK(a[0] == MonomialIdeal::maximal(2));
  CHECK(a[1] == MonomialIdeal::maximal(2));
  // Characteristic 3 behaves like characteristic 0 here.
  const auto b = measuring_sequence(seq("[x1^2, x2^2]"), 3);
  CHECK(b[0] == ideal("[x1, x2^2]"));
}

TEST_CASE("colon description agrees in characteristic 0") {
  for (const char* s : {"[x1, x2^4]; [x1, x2^2]", "[x1, x2^2]", "[x1^2, x1*x2, x2^3]",
                        "[x1, x2^2, x3^2]", "[x1^2, x2^2, x3^2]"}) {
    CHECK(measuring_sequence(seq(s), 0).ideals == measuring_char0_colon(seq(s)).ideals);
  }
  const auto c = measuring_char0_colon(seq("[x1, x2^2]"));
  CHECK(c[0] == ideal("[x1, x2^2]"));
  CHECK(c[1] == ideal("[x1, x2]"));
}

TEST_CASE("every A_i contains x_i and passing sets are ideals") {
  for (const char* s : {"[x1^2, x1*x2^2, x2^4]", "[x1^3, x1*x2, x2^2]", "[x1, x2^3]; [x1^2, x2]"}) {
    for (std::uint32_t p : {0u, 2u, 3u}) {
      const auto a = measuring_sequence(seq(s), p);
      for (std::size_t i = 0; i < a.vars(); ++i) CHECK(a[i].contains(Monomial::variable(a.vars(), i)));
      CHECK(passing_set_is_ideal(a));
    }
  }
}

TEST_CASE("product ideals A(alpha)") {
  const auto a = measuring_sequence(seq("[x1, x2^4]; [x1, x2^2]"), 0);
  CHECK(product_ideal(a, Monomial({1, 0})) == a[0]);
  CHECK(product_ideal(a, Monomial({0, 4})) == power(ideal("[x1, x2]"), 4));

  const auto b = measuring_sequence(seq("[x1^2, x2^2]"), 2);
  CHECK(product_ideal(b, Monomial({0, 2})) == ideal("[x1^2, x2^2]"));
  for (const auto& c : verify_product_containment(b)) CHECK(c.contained);
  for (const auto& c : verify_product_containment(a)) CHECK(c.contained);
  for (const auto& c : verify_product_containment(measuring_sequence(seq("[x1, x2]"), 5))) CHECK(c.contained);
}

TEST_CASE("induced map equality") {
  const auto a = measuring_sequence(seq("[x1, x2^4]; [x1, x2^2]"), 0);
  const auto identity = Substitution::identity(2, 4);
  CHECK(verify_induced_map(identity, a.source[0], a, 4));
  const auto g = Substitution({parse_polynomial("x1 + x2^2 + x2^3", 2, {}), parse_polynomial("x2", 2, {})}, 4);
  CHECK(verify_induced_map(g, a.source[0], a, 4));
  CHECK(verify_induced_map(g, a.source[1], a, 4));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    CHECK(verify_induced_map(random_automorphism(2, 4, 0, seed), a.source[0], a, 4));
  }
}

TEST_CASE("membership criterion for A_i") {
  const auto a = measuring_sequence(seq("[x1, x2^4]; [x1, x2^2]"), 0);
  const auto report = verify_membership_criterion(a, 50, 3);
  CHECK(report.passed());
  CHECK(report.trials > 50);

  // x -> x + t*y leaves A_1 = (x, y^4).
  const auto bad = elementary(2, 0, Monomial::variable(2, 1), true);
  CHECK_FALSE(preserves_ideal(bad, a[0]));
  const auto good = elementary(2, 0, Monomial::variable(2, 1, 4), true);
  CHECK(preserves_ideal(good, a[0]));
  CHECK(preserves_ideal(good, a[1]));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(measuring_sequence({}, 0), InputError);
  CHECK_THROWS_AS(measuring_sequence(seq("[x1]; [x1, x2]"), 0), InputError);
  CHECK_THROWS_AS(measuring_sequence({ideal("[x1, x2]"), ideal("[x1, x2, x3]", 3)}, 0),
                  DimensionMismatch);
  CHECK_THROWS_AS(measuring_sequence(seq("[x1, x2]"), 4), InputError);
}
