#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "aligncorr/classifier.hpp"
#include "aligncorr/errors.hpp"
#include "aligncorr/flags.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;
using Kind = UniversalityVerdict::Kind;

namespace {
UniversalityVerdict verdict(const std::string& s, std::uint32_t p = 0) {
  return classify(parse_ideal_sequence(s), p);
}
}  // namespace

TEST_CASE("curvilinear family sweep") {
  const Kind expected[] = {Kind::TrivialFiber, Kind::Dominates, Kind::NonUniversal,
                           Kind::NonUniversal, Kind::NonUniversal, Kind::NonUniversal};
  for (int m = 1; m <= 6; ++m) {
    CAPTURE(m);
    CHECK(verdict("[x1, x2^" + std::to_string(m + 1) + "]").kind == expected[m - 1]);
  }
}

TEST_CASE("single coordinate shapes") {
  const auto v = verdict("[x1, x2^3]");
  CHECK(v == UniversalityVerdict{Kind::Dominates, 2, 1, 1});
  CHECK(verdict("[x1, x2^4]; [x1, x2^2]").kind == Kind::NonUniversal);
  CHECK(verdict("[x1, x2]").kind == Kind::TrivialFiber);
}

TEST_CASE("verdict does not depend on variable names") {
  for (const char* s : {"[x1, x2^3]", "[x1, x2^4]; [x1, x2^2]", "[x1^2, x1*x2, x2^3]"}) {
    const auto ideals = parse_ideal_sequence(s);
    std::vector<MonomialIdeal> swapped;
    for (const auto& I : ideals) swapped.push_back(permute(I, {1, 0}));
    CHECK(classify(ideals, 0) == classify(swapped, 0));
  }
}

TEST_CASE("kind names round trip") {
  for (Kind k : {Kind::NonUniversal, Kind::Dominates, Kind::TrivialFiber, Kind::Unresolved}) {
    CHECK(verdict_kind_from_string(to_string(k)) == k);
  }
  CHECK_THROWS_AS(verdict_kind_from_string("Maybe"), ParseError);
}
