// Acceptance gate: one [PASS]/[FAIL] line per criterion.
#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "aligncorr/checks.hpp"
#include "aligncorr/classifier.hpp"
#include "aligncorr/fiber.hpp"
#include "aligncorr/json_io.hpp"
#include "aligncorr/linear_algebra.hpp"
#include "aligncorr/oracle.hpp"
#include "aligncorr/text.hpp"

using namespace aligncorr;

namespace {

const std::string kFixtures = ALIGNCORR_FIXTURES;

struct Failure {
  std::string why;
};

void require(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

json load(const std::string& name) {
  std::ifstream in(kFixtures + "/" + name);
  return json::parse(in);
}

struct CatalogEntry {
  std::vector<MonomialIdeal> ideals;
  std::optional<std::size_t> expected_total;
};

std::vector<CatalogEntry> catalog() {
  std::vector<CatalogEntry> out;
  const auto doc = load("catalog.json");
  for (const auto& e : doc.at("entries")) {
    CatalogEntry entry{parse_ideal_sequence(e.at("ideals").get<std::string>()), std::nullopt};
    if (e.contains("expected")) entry.expected_total = e.at("expected").at("total_dimension").get<std::size_t>();
    out.push_back(std::move(entry));
  }
  return out;
}

FlagSequence default_flag(const MeasuringSequence& a) {
  return enumerate_completions(preorder_from_measuring(a)).front();
}

// Coefficient vector of a form over all degree-d monomials in M variables.
Vector form_vector(const ProjectiveForm& f, std::size_t M, std::uint32_t d) {
  const auto monos = monomials_of_degree(M, d);
  Vector v(monos.size(), Scalar(0L));
  for (const auto& [m, c] : f.terms) {
    v[static_cast<std::size_t>(std::find(monos.begin(), monos.end(), m) - monos.begin())] = c;
  }
  return v;
}

ProjectiveForm form(std::size_t M, std::vector<std::pair<std::vector<std::uint32_t>, long>> terms) {
  ProjectiveForm f;
  for (auto& [e, c] : terms) {
    e.resize(M, 0);
    f.degree = 0;
    for (auto k : e) f.degree += k;
    f.terms.emplace_back(Monomial(e), Scalar(c));
  }
  return f;
}

Subspace form_space(const std::vector<ProjectiveForm>& basis, std::size_t M, std::uint32_t d) {
  std::vector<Vector> rows;
  for (const auto& f : basis) rows.push_back(form_vector(f, M, d));
  return span(rows, monomials_of_degree(M, d).size());
}

std::string ac1() {
  const auto ideals = parse_ideal_sequence("[x1, x2^4]; [x1, x2^2]");
  const auto a = measuring_sequence(ideals, 0);
  const auto flag = default_flag(a);
  const auto coords = coordinate_set(a, flag);
  require(coords == CoordinateSet{{0, Monomial({0, 2})}, {0, Monomial({0, 3})}},
          "coordinate set is not {(1,y^2), (1,y^3)}");

  const auto g = coset_parametrization(coords, 2);
  const auto frame = quotient_frame(ideals[0], g, 4);
  const auto J1 = parse_ideal("[x1, x2^2]", 2);
  require(frame.j1 == J1 && frame.j2 == product(J1, J1), "frame is not (x,y^2)/(x,y^2)^2");
  require(frame.basis == std::vector<Monomial>{Monomial({0, 3}), Monomial({1, 1}), Monomial({0, 2}),
                                               Monomial({1, 0})},
          "frame basis is not (y^3, xy, y^2, x)");

  const auto map = plucker_map(a, flag);
  const auto A = Coefficient::parameter(0), B = Coefficient::parameter(1);
  const std::vector<Coefficient> expected{-B, A * A, A, A, Coefficient::one(), Coefficient::zero()};
  require(map.coordinates == expected, "Plücker vector differs from (-b, a^2, a, a, 1, 0)");

  const auto eq = interpolate_image_equations(map, 2, std::nullopt, 1);
  const std::size_t M = 6;
  const auto linear = form_space(eq.bases[0], M, 1);
  const auto want_linear = form_space({form(M, {{{0, 0, 0, 0, 0, 1}, 1}}),
                                       form(M, {{{0, 0, 1}, 1}, {{0, 0, 0, 1}, -1}})},
                                      M, 1);
  require(linear == want_linear, "degree-1 equations are not span{x5, x2 - x3}");
  const auto quadric = form(M, {{{0, 1, 0, 0, 1}, 1}, {{0, 0, 2}, -1}});
  require(form_space(eq.bases[1], M, 2).contains(form_vector(quadric, M, 2)),
          "degree-2 equations miss x1*x4 - x2^2");

  const auto fixture = load("example_boundary.json");
  std::vector<BoundaryCandidate> candidates;
  for (const auto& c : fixture.at("candidates")) {
    candidates.push_back({c.at("name").get<std::string>(), c.at("spanning").get<std::vector<std::string>>()});
  }
  const auto params = fixture.at("parameters").get<std::vector<std::string>>();
  const auto probe = boundary_probe(map, eq, params, candidates);
  require(probe.size() == 2, "boundary fixture should hold the family and the cone point");
  const auto alpha = Coefficient::parameter(0), beta = Coefficient::parameter(1), zero = Coefficient::zero();
  require(probe[0].point == std::vector<Coefficient>{alpha, beta, zero, zero, zero, zero},
          "family point is not (alpha, beta, 0, 0, 0, 0)");
  require(probe[0].satisfies_equations && probe[0].off_chart, "family is not a boundary line of the closure");
  std::vector<Scalar> cone, family_at_zero;
  const std::vector<Scalar> at{Scalar(1L), Scalar(0L)};
  for (const auto& c : probe[1].point) cone.push_back(c.evaluate(at));
  for (const auto& c : probe[0].point) family_at_zero.push_back(c.evaluate(at));
  require(projectively_equal(cone, family_at_zero), "cone point is not the family at beta = 0");
  require(probe[1].satisfies_equations, "cone point misses the equations");
  return "coordinates, frame, (-b, a^2, a, a, 1, 0), {x5, x2 - x3, x1*x4 - x2^2}, boundary line and cone point";
}

std::string ac2() {
  const auto entries = catalog();
  require(entries.size() >= 12, "catalog has fewer than 12 entries");
  std::size_t expected_checked = 0;
  for (const auto& e : entries) {
    const auto label = format_ideal_sequence(e.ideals);
    require(e.ideals.front().vars() <= 3, label + ": more than 3 variables");
    for (const auto& I : e.ideals) require(colength(I) <= 8, label + ": colength above 8");
    const auto total = total_dimension(e.ideals, 0);
    const auto tangent = tangent_orbit_dimension(e.ideals).dimension;
    require(total == tangent, label + ": sum of colengths " + std::to_string(total) +
                                  " vs tangent dimension " + std::to_string(tangent));
    if (e.expected_total) {
      require(total == *e.expected_total, label + ": expected " + std::to_string(*e.expected_total));
      ++expected_checked;
    }
  }
  require(expected_checked >= 3, "catalog lacks the pinned dimensions");
  return std::to_string(entries.size()) + " entries agree";
}

std::string ac3() {
  std::size_t compared = 0;
  for (const auto& e : catalog()) {
    if (e.ideals.front().vars() != 2) continue;
    for (std::uint32_t p : {2u, 3u}) {
      const auto a = measuring_sequence(e.ideals, p);
      if (a.cutoff > 4) continue;
      for (std::size_t i = 0; i < 2; ++i) {
        const auto brute = enumerate_images(i, e.ideals, p, a.cutoff);
        const auto expected = sum(a[i], MonomialIdeal::maximal_power(2, a.cutoff));
        require(brute == expected, format_ideal_sequence(e.ideals) + " p=" + std::to_string(p) +
                                       ": A" + std::to_string(i + 1) + " " + format_ideal(a[i]) +
                                       " vs enumeration " + format_ideal(brute));
      }
      ++compared;
    }
  }
  const auto rigid = parse_ideal_sequence("[x1^2, x2^2]");
  const auto a = measuring_sequence(rigid, 2);
  require(a[0] == MonomialIdeal::maximal(2) && a[1] == MonomialIdeal::maximal(2),
          "(x^2, y^2) at p = 2 should measure (m, m)");
  require(total_dimension(a) == 2, "(x^2, y^2) at p = 2 should have dimension 2");
  return std::to_string(compared) + " (entry, p) pairs agree";
}

std::string ac4() {
  const auto d = [](const char* s, std::uint32_t p) { return etale_degree(parse_ideal_sequence(s), p); };
  require(d("[x1^2, x2^2]", 0) == 2, "(x^2, y^2) char 0 should have degree 2");
  require(d("[x1, x2^2]", 0) == 1, "(x, y^2) should have degree 1");
  require(d("[x1^2, x2^2]", 2) == 1, "(x^2, y^2) char 2 should have degree 1");
  return "2, 1, 1";
}

std::string ac5() {
  std::size_t checked = 0;
  auto run = [&](const std::vector<MonomialIdeal>& ideals, std::uint32_t p) {
    for (const auto& c : verify_product_containment(measuring_sequence(ideals, p))) {
      require(c.contained, format_ideal_sequence(ideals) + " p=" + std::to_string(p) + ": A(" +
                               format_monomial(c.generator) + ") not inside I_" +
                               std::to_string(c.ideal_index + 1));
      ++checked;
    }
  };
  for (const auto& e : catalog()) {
    for (std::uint32_t p : {0u, 2u, 3u}) run(e.ideals, p);
  }
  const std::uint32_t chars[] = {0, 2, 3};
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const std::size_t n = 2 + seed % 2;
    run(random_ideal_sequence(n, 1 + seed % 3, 8, seed), chars[seed % 3]);
  }
  return std::to_string(checked) + " containments, 0 violations";
}

std::string ac6() {
  using Kind = UniversalityVerdict::Kind;
  const Kind expected[] = {Kind::TrivialFiber, Kind::Dominates, Kind::NonUniversal,
                           Kind::NonUniversal, Kind::NonUniversal, Kind::NonUniversal};
  for (int m = 1; m <= 6; ++m) {
    const auto v = classify(parse_ideal_sequence("[x1, x2^" + std::to_string(m + 1) + "]"), 0);
    require(v.kind == expected[m - 1], "m = " + std::to_string(m) + " gave " + to_string(v.kind));
  }
  require(classify(parse_ideal_sequence("[x1, x2^4]; [x1, x2^2]"), 0).kind == Kind::NonUniversal,
          "worked example should be NonUniversal");
  return "sweep m = 1..6 and the worked example";
}

std::string ac7() {
  std::size_t maps = 0, toric = 0;
  for (const auto& e : catalog()) {
    const auto a = measuring_sequence(e.ideals, 0);
    for (const auto& flag : enumerate_completions(preorder_from_measuring(a))) {
      const auto map = plucker_map(a, flag);
      const auto report = toric_check(map);
      const auto label = format_ideal_sequence(e.ideals);
      require(report.homogeneous, label + ": Plücker coordinates are not weight-homogeneous");
      if (report.independent) {
        require(report.all_monomial, label + ": independent weights but a non-monomial coordinate");
        ++toric;
      }
      ++maps;
    }
  }
  return std::to_string(maps) + " maps homogeneous, " + std::to_string(toric) + " with independent weights all monomial";
}

std::string ac8() {
  std::vector<std::pair<std::vector<MonomialIdeal>, std::uint32_t>> inputs;
  for (const auto& e : catalog()) {
    inputs.emplace_back(e.ideals, 0);
    if (e.ideals.front().vars() == 2) inputs.emplace_back(e.ideals, 2);
  }
  std::size_t outcomes = 0;
  for (const auto& [ideals, p] : inputs) {
    for (const auto& o : run_property_suite(ideals, p, {1, 50})) {
      require(o.passed, format_ideal_sequence(ideals) + " p=" + std::to_string(p) + ": " + o.name +
                            " failed (" + o.detail + ")");
      ++outcomes;
    }
  }
  // Completion counts with four variables, where the preorders get richer.
  std::size_t orders = 0;
  for (const char* s : {"[x1^2, x2^2, x3^2, x4^2]", "[x1, x2^2, x3^2, x4^3]", "[x1^2, x2^2, x3, x4]",
                        "[x1, x2^2, x2*x3, x3^2, x4^2]", "[x1^2, x1*x2, x2^2, x3^3, x4]"}) {
    for (std::uint32_t p : {0u, 2u}) {
      const auto pre = preorder_from_measuring(measuring_sequence(parse_ideal_sequence(s), p));
      const auto completions = enumerate_completions(pre).size();
      const auto extensions = count_linear_extensions(pre.matrix());
      require(completions == extensions, std::string(s) + ": " + std::to_string(completions) +
                                             " completions vs " + std::to_string(extensions) +
                                             " linear extensions");
      ++orders;
    }
  }
  return std::to_string(inputs.size()) + " suite runs, " + std::to_string(outcomes) + " checks and " +
         std::to_string(orders) + " four-variable completion counts, 0 violations";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> only(argv + 1, argv + argc);
  struct Criterion {
    const char* id;
    const char* name;
    double limit_seconds;
    std::function<std::string()> body;
  };
  const std::vector<Criterion> criteria{
      {"AC1", "worked-example regression", 5, ac1},
      {"AC2", "dimension formula vs tangent oracle", 30, ac2},
      {"AC3", "characteristic-p measuring vs enumeration", 60, ac3},
      {"AC4", "etale degree", 0, ac4},
      {"AC5", "product-ideal containment", 0, ac5},
      {"AC6", "classifier sweep", 0, ac6},
      {"AC7", "monomiality and weight-homogeneity", 0, ac7},
      {"AC8", "structural property suites", 120, ac8},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.body();
    } catch (const Failure& f) {
      ok = false;
      detail = f.why;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && c.limit_seconds > 0 && seconds > c.limit_seconds) {
      ok = false;
      detail += "; over the time limit";
    }
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << seconds;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": " << detail << " ("
              << time.str() << " s)" << std::endl;
    failed += ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
