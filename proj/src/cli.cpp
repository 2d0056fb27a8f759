#include "aligncorr/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "aligncorr/checks.hpp"
#include "aligncorr/classifier.hpp"
#include "aligncorr/errors.hpp"
#include "aligncorr/fiber.hpp"
#include "aligncorr/json_io.hpp"
#include "aligncorr/oracle.hpp"
#include "aligncorr/text.hpp"

namespace aligncorr {

namespace {

struct JobSpec {
  std::string ideals_text;
  std::uint32_t characteristic = 0;
  std::string weights_text;
  std::optional<std::uint32_t> cutoff;
  std::string flag_text;
  std::uint32_t degree = 2;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  bool json_output = false;
  std::string fixture;
};

std::vector<MonomialIdeal> load_ideals(const JobSpec& job) {
  auto ideals = parse_ideal_sequence(job.ideals_text);
  validate_sequence(ideals);
  validate_characteristic(job.characteristic);
  return ideals;
}

std::optional<WeightVector> load_weights(const JobSpec& job, std::size_t vars) {
  if (job.weights_text.empty()) return std::nullopt;
  std::vector<std::uint32_t> w;
  std::stringstream in(job.weights_text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long value = std::stol(item, &used);
      if (used != item.size() || value < 1) throw std::invalid_argument(item);
      w.push_back(static_cast<std::uint32_t>(value));
    } catch (const std::logic_error&) {
      throw ParseError("weights must be positive integers separated by commas: '" + job.weights_text + "'");
    }
  }
  if (w.size() != vars) {
    throw DimensionMismatch("expected " + std::to_string(vars) + " weights, got " + std::to_string(w.size()));
  }
  return WeightVector(std::move(w));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

std::string class_text(const std::vector<std::size_t>& cls) {
  std::string s = "{";
  for (std::size_t k = 0; k < cls.size(); ++k) {
    if (k) s += ", ";
    s += "x" + std::to_string(cls[k] + 1);
  }
  return s + "}";
}

std::string flag_text(const FlagSequence& flag) {
  std::string s;
  for (std::size_t k = 0; k < flag.classes.size(); ++k) {
    if (k) s += " < ";
    s += class_text(flag.classes[k]);
  }
  return s;
}

FlagSequence choose_flag(const JobSpec& job, const MeasuringSequence& a, std::ostream& err) {
  const auto pre = preorder_from_measuring(a);
  if (!job.flag_text.empty()) {
    json parsed;
    try {
      parsed = json::parse(job.flag_text);
    } catch (const json::exception& e) {
      throw ParseError("--flag is not valid JSON: " + std::string(e.what()));
    }
    auto flag = flag_from_json(parsed);
    if (!is_completion(pre, flag)) {
      throw IncompatibleFlag("--flag " + job.flag_text + " is not a completion of the measuring preorder");
    }
    return flag;
  }
  const auto all = enumerate_completions(pre);
  if (all.size() > 1) {
    err << "warning: " << all.size() << " flag completions; using " << flag_text(all.front())
        << " (choose another with --flag)\n";
  }
  return all.front();
}

std::string coordinate_text(const CoordinatePair& c) {
  return "a_{" + std::to_string(c.i + 1) + "," + format_monomial(c.v) + "}";
}

json ideals_text_json(const std::vector<MonomialIdeal>& ideals) {
  json out = json::array();
  for (const auto& I : ideals) out.push_back(format_ideal(I));
  return out;
}

void emit(const JobSpec& job, std::ostream& out, const json& report, const std::string& text) {
  if (job.json_output) out << report.dump(2) << "\n";
  else out << text;
}

int cmd_measure(const JobSpec& job, std::ostream& out) {
  const auto ideals = load_ideals(job);
  const auto weights = load_weights(job, ideals.front().vars());
  const auto a = measuring_sequence(ideals, job.characteristic);
  const auto pre = preorder_from_measuring(a);
  json report = to_json(a);
  report["measuring_text"] = ideals_text_json(a.ideals);
  json classes = json::array();
  for (const auto& cls : pre.classes()) {
    json c = json::array();
    for (auto i : cls) c.push_back(i + 1);
    classes.push_back(c);
  }
  report["preorder"] = pre.matrix();
  report["classes"] = classes;

  std::ostringstream text;
  text << "measuring sequence (characteristic " << a.characteristic << "):\n";
  for (std::size_t i = 0; i < a.vars(); ++i) {
    text << "  A" << (i + 1) << " = " << format_ideal(a[i]) << "\n";
  }
  text << "order:";
  bool any = false;
  for (std::size_t i = 0; i < a.vars(); ++i) {
    for (std::size_t j = 0; j < a.vars(); ++j) {
      if (pre.less(i, j)) {
        text << " x" << (i + 1) << " < x" << (j + 1) << ";";
        any = true;
      }
    }
  }
  text << (any ? "" : " (no strict relations)") << "\nclasses:";
  for (const auto& cls : pre.classes()) text << " " << class_text(cls);
  text << "\n";

  if (weights) {
    json types = json::array();
    text << "exponent types of input generators:\n";
    for (const auto& I : ideals) {
      json row = json::array();
      for (const auto& g : I.generators()) {
        const auto t = exponent_type(g, job.characteristic, *weights);
        row.push_back(t.parts);
        text << "  " << format_monomial(g) << ": (";
        for (std::size_t k = 0; k < t.parts.size(); ++k) text << (k ? ", " : "") << t.parts[k];
        text << ")\n";
      }
      types.push_back(row);
    }
    report["weights"] = weights->weights();
    report["exponent_types"] = types;
  }
  emit(job, out, report, text.str());
  return 0;
}

int cmd_flags(const JobSpec& job, std::ostream& out) {
  const auto a = measuring_sequence(load_ideals(job), job.characteristic);
  const auto all = enumerate_completions(preorder_from_measuring(a));
  json report{{"count", all.size()}, {"completions", json::array()}};
  std::ostringstream text;
  text << all.size() << (all.size() == 1 ? " completion" : " completions") << ":\n";
  for (std::size_t k = 0; k < all.size(); ++k) {
    json ideals = json::array();
    for (const auto& B : all[k].ideals()) ideals.push_back(format_ideal(B));
    report["completions"].push_back({{"classes", to_json(all[k])}, {"ideals", ideals}});
    text << "  " << (k + 1) << ": " << flag_text(all[k]) << "\n";
  }
  emit(job, out, report, text.str());
  return 0;
}

int cmd_coords(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto a = measuring_sequence(load_ideals(job), job.characteristic);
  const auto flag = choose_flag(job, a, err);
  const auto coords = coordinate_set(a, flag);
  const auto names = parameter_names(coords.size());
  const auto pre = preorder_from_measuring(a);
  const auto classes = coordinate_equivalence(coords, pre);
  json report{{"flag", to_json(flag)}, {"coordinates", to_json(coords)}, {"names", names}};
  json eq = json::array();
  for (const auto& cls : classes) eq.push_back(cls);
  report["equivalence_classes"] = eq;
  std::ostringstream text;
  text << "flag: " << flag_text(flag) << "\n";
  text << coords.size() << " fiber coordinates:\n";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    text << "  " << names[k] << " = " << coordinate_text(coords[k]) << "\n";
  }
  text << classes.size() << " equivalence classes:";
  for (const auto& cls : classes) {
    text << " {";
    for (std::size_t k = 0; k < cls.size(); ++k) text << (k ? ", " : "") << names[cls[k]];
    text << "}";
  }
  text << "\n";
  emit(job, out, report, text.str());
  return 0;
}

int cmd_dims(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto a = measuring_sequence(load_ideals(job), job.characteristic);
  const auto flag = choose_flag(job, a, err);
  const auto total = total_dimension(a);
  const auto d = fiber_dimension_decomposition(a, flag);
  std::vector<std::size_t> cols;
  for (const auto& A : a.ideals) cols.push_back(colength(A));
  json report{{"total", total},
              {"colengths", cols},
              {"flag", to_json(flag)},
              {"decomposition", {{"base", d.base}, {"flag_dim", d.flag_dim}, {"coord_count", d.coord_count}}}};
  std::ostringstream text;
  text << "total dimension: " << total << "\n";
  text << "  colengths of A_i:";
  for (auto c : cols) text << " " << c;
  text << "\n  base " << d.base << " + flag " << d.flag_dim << " + fiber " << d.coord_count << " = "
       << d.total() << "\n";
  emit(job, out, report, text.str());
  return d.total() == total ? 0 : 2;
}

int cmd_etale(const JobSpec& job, std::ostream& out) {
  const auto ideals = load_ideals(job);
  if (ideals.front().vars() > 8) throw AmbientTooLarge("etale degree needs at most 8 variables");
  const auto report_data = etale_report(measuring_sequence(ideals, job.characteristic));
  json report{{"degree", report_data.degree()},
              {"stabilizer", report_data.stabilizer},
              {"fixing_measuring", report_data.fixing_measuring}};
  std::ostringstream text;
  text << "etale degree: " << report_data.degree() << " (" << report_data.stabilizer
       << " permutations fix the input, " << report_data.fixing_measuring
       << " also fix the measuring sequence)\n";
  emit(job, out, report, text.str());
  return 0;
}

int cmd_classify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto a = measuring_sequence(load_ideals(job), job.characteristic);
  const auto flag = choose_flag(job, a, err);
  const auto v = classify(a, flag);
  std::ostringstream text;
  text << to_string(v.kind);
  if (v.shape) text << " (case " << v.shape << ", m=" << v.m << ", l=" << v.l << ")";
  text << "\n";
  emit(job, out, to_json(v), text.str());
  return 0;
}

int cmd_fiber(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const auto a = measuring_sequence(load_ideals(job), job.characteristic);
  const auto flag = choose_flag(job, a, err);
  const auto map = plucker_map(a, flag);
  const auto& names = map.parameter_names;
  const auto g = coset_parametrization(map.coords, map.vars, map.characteristic);

  json report{{"flag", to_json(flag)}, {"coordinates", to_json(map.coords)}, {"parameters", names}};
  std::ostringstream text;
  text << "flag: " << flag_text(flag) << "\n";
  text << "coset parametrization:\n";
  json param = json::array();
  for (std::size_t i = 0; i < map.vars; ++i) {
    const auto s = g.image(i).to_string(names);
    param.push_back(s);
    text << "  x" << (i + 1) << " -> " << s << "\n";
  }
  report["parametrization"] = param;

  json factors = json::array();
  for (const auto& f : map.factors) {
    json basis = json::array();
    for (const auto& m : f.frame.basis) basis.push_back(format_monomial(m));
    factors.push_back({{"ideal", format_ideal(f.ideal)},
                       {"j1", format_ideal(f.frame.j1)},
                       {"j2", format_ideal(f.frame.j2)},
                       {"basis", basis},
                       {"rank", f.rank()}});
    text << "factor " << format_ideal(f.ideal) << ": J1 = " << format_ideal(f.frame.j1)
         << ", J2 = " << format_ideal(f.frame.j2) << "\n  basis:";
    for (const auto& m : f.frame.basis) text << " " << format_monomial(m);
    text << "\n";
  }
  report["factors"] = factors;

  json coords_json = json::array();
  text << "plucker coordinates:\n";
  for (std::size_t k = 0; k < map.coordinates.size(); ++k) {
    const auto s = map.coordinates[k].to_string(names);
    coords_json.push_back({{"label", map.labels[k]}, {"value", s}, {"exact", to_json(map.coordinates[k])}});
    text << "  x" << k << " " << map.labels[k] << " = " << s << "\n";
  }
  report["plucker"] = coords_json;

  const auto toric = toric_check(map);
  report["toric"] = {{"independent", toric.independent},
                     {"all_monomial", toric.all_monomial},
                     {"homogeneous", toric.homogeneous}};
  text << "weights " << (toric.independent ? "independent" : "dependent") << "; coordinates "
       << (toric.all_monomial ? "all monomial" : "not all monomial") << "; "
       << (toric.homogeneous ? "weight-homogeneous" : "NOT weight-homogeneous") << "\n";

  bool relations = true;
  for (const auto& f : map.factors) relations = relations && satisfies_plucker_relations(f);
  report["plucker_relations"] = relations;

  std::optional<ImageEquations> equations;
  if (map.characteristic == 0) {
    equations = interpolate_image_equations(map, job.degree, job.samples, job.seed);
    json eq{{"degree", job.degree}, {"samples", equations->samples}, {"dimensions", equations->dimensions}};
    json gens = json::array();
    text << "image equations up to degree " << job.degree << " (" << equations->samples << " samples):\n";
    for (std::size_t e = 0; e < equations->new_generators.size(); ++e) {
      json row = json::array();
      text << "  degree " << (e + 1) << " (" << equations->dimensions[e] << " forms), new:";
      for (const auto& form : equations->new_generators[e]) {
        row.push_back(form.to_string());
        text << " " << form.to_string() << ";";
      }
      text << "\n";
      gens.push_back(row);
    }
    eq["generators"] = gens;
    report["equations"] = eq;
  } else {
    err << "note: image equations are interpolated in characteristic 0 only\n";
  }

  if (!job.fixture.empty()) {
    if (!equations) throw InputError("boundary probe needs the characteristic-0 image equations");
    const auto fixture = read_json_file(job.fixture);
    std::vector<std::string> params;
    std::vector<BoundaryCandidate> candidates;
    try {
      params = fixture.at("parameters").get<std::vector<std::string>>();
      for (const auto& c : fixture.at("candidates")) {
        candidates.push_back({c.at("name").get<std::string>(), c.at("spanning").get<std::vector<std::string>>()});
      }
    } catch (const json::exception& e) {
      throw ParseError("boundary fixture: " + std::string(e.what()));
    }
    const auto results = boundary_probe(map, *equations, params, candidates);
    json probe = json::array();
    text << "boundary probe:\n";
    for (const auto& r : results) {
      json point = json::array();
      std::string shown;
      for (std::size_t k = 0; k < r.point.size(); ++k) {
        point.push_back(r.point[k].to_string(params));
        shown += (k ? ", " : "") + r.point[k].to_string(params);
      }
      probe.push_back({{"name", r.name},
                       {"point", point},
                       {"satisfies_equations", r.satisfies_equations},
                       {"off_chart", r.off_chart}});
      text << "  " << r.name << ": (" << shown << ") "
           << (r.satisfies_equations ? "on the closure" : "NOT on the closure") << ", "
           << (r.off_chart ? "off the affine chart" : "on the affine chart") << "\n";
    }
    report["boundary"] = probe;
  }
  emit(job, out, report, text.str());
  return relations && toric.homogeneous ? 0 : 2;
}

int cmd_oracle(const JobSpec& job, std::ostream& out) {
  const auto ideals = load_ideals(job);
  const auto a = measuring_sequence(ideals, job.characteristic);
  json report;
  std::ostringstream text;
  bool agree = true;
  if (job.characteristic == 0) {
    const auto tangent = tangent_orbit_dimension(ideals, job.cutoff);
    const auto total = total_dimension(a);
    agree = tangent.dimension == total;
    report = {{"tangent_dimension", tangent.dimension},
              {"cutoff", tangent.cutoff},
              {"total_dimension", total},
              {"agree", agree}};
    text << "tangent orbit dimension " << tangent.dimension << " (cutoff " << tangent.cutoff
         << "), sum of colengths " << total << ": " << (agree ? "agree" : "DISAGREE") << "\n";
  } else {
    const std::uint32_t N = job.cutoff.value_or(a.cutoff);
    json images = json::array();
    for (std::size_t i = 0; i < a.vars(); ++i) {
      const auto brute = enumerate_images(i, ideals, job.characteristic, N);
      const auto expected = sum(a[i], MonomialIdeal::maximal_power(a.vars(), N));
      const bool same = brute == expected;
      agree = agree && same;
      images.push_back({{"enumerated", format_ideal(brute)}, {"measuring", format_ideal(expected)}, {"agree", same}});
      text << "A" << (i + 1) << ": enumeration " << format_ideal(brute) << ", elementary test "
           << format_ideal(expected) << (same ? "" : "  DISAGREE") << "\n";
    }
    report = {{"cutoff", N}, {"images", images}, {"agree", agree}};
  }
  emit(job, out, report, text.str());
  return agree ? 0 : 2;
}

int cmd_check(const JobSpec& job, std::ostream& out) {
  std::vector<std::pair<std::vector<MonomialIdeal>, std::uint32_t>> inputs;
  if (!job.fixture.empty()) {
    const auto catalog = read_json_file(job.fixture);
    try {
      for (const auto& entry : catalog.at("entries")) {
        auto ideals = parse_ideal_sequence(entry.at("ideals").get<std::string>());
        validate_sequence(ideals);
        inputs.emplace_back(std::move(ideals), entry.value("characteristic", job.characteristic));
      }
    } catch (const json::exception& e) {
      throw ParseError("catalog fixture: " + std::string(e.what()));
    }
  }
  if (!job.ideals_text.empty()) inputs.emplace_back(load_ideals(job), job.characteristic);
  if (inputs.empty()) throw InputError("check needs an ideal sequence or --fixture catalog");

  json report = json::array();
  std::ostringstream text;
  bool all_passed = true;
  SuiteOptions options;
  options.seed = job.seed;
  for (const auto& [ideals, p] : inputs) {
    const auto outcomes = run_property_suite(ideals, p, options);
    json entry{{"ideals", format_ideal_sequence(ideals)}, {"characteristic", p}, {"checks", json::array()}};
    text << format_ideal_sequence(ideals) << " (characteristic " << p << ")\n";
    for (const auto& o : outcomes) {
      entry["checks"].push_back({{"name", o.name}, {"passed", o.passed}, {"detail", o.detail}});
      text << "  [" << (o.passed ? "PASS" : "FAIL") << "] " << o.name << ": " << o.detail << "\n";
      all_passed = all_passed && o.passed;
    }
    report.push_back(entry);
  }
  json wrapped{{"passed", all_passed}, {"inputs", report}};
  text << (all_passed ? "all checks passed" : "some checks FAILED") << "\n";
  emit(job, out, wrapped, text.str());
  return all_passed ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of alignment correspondences of monomial ideal sequences"};
  app.require_subcommand(1);
  JobSpec job;

  auto add_common = [&](CLI::App* sub, bool ideals_required) {
    auto* opt = sub->add_option("ideals", job.ideals_text, "ideal sequence, e.g. \"[x1, x2^4]; [x1, x2^2]\"");
    if (ideals_required) opt->required();
    sub->add_option("--char", job.characteristic, "characteristic (0 or a prime)");
    sub->add_option("--seed", job.seed, "random seed");
    sub->add_flag("--json", job.json_output, "emit JSON");
  };
  auto* measure = app.add_subcommand("measure", "measuring sequence, order and classes");
  add_common(measure, true);
  measure->add_option("--weights", job.weights_text, "variable weights, e.g. 1,2");
  auto* flags = app.add_subcommand("flags", "all flag completions");
  add_common(flags, true);
  auto* coords = app.add_subcommand("coords", "fiber coordinates for a flag");
  add_common(coords, true);
  auto* dims = app.add_subcommand("dims", "total dimension and its decomposition");
  add_common(dims, true);
  auto* etale = app.add_subcommand("etale", "etale degree");
  add_common(etale, true);
  auto* classify_cmd = app.add_subcommand("classify", "universality verdict");
  add_common(classify_cmd, true);
  auto* fiber = app.add_subcommand("fiber", "Plücker map, image equations, toric check");
  add_common(fiber, true);
  fiber->add_option("--degree", job.degree, "largest degree of interpolated equations");
  fiber->add_option("--samples", job.samples, "number of random specializations");
  fiber->add_option("--fixture", job.fixture, "boundary candidates (JSON)");
  auto* oracle = app.add_subcommand("oracle", "brute-force cross-checks");
  add_common(oracle, true);
  oracle->add_option("--cutoff", job.cutoff, "truncation degree");
  auto* check = app.add_subcommand("check", "run the property suite");
  add_common(check, false);
  check->add_option("--fixture", job.fixture, "catalog of ideal sequences (JSON)");
  for (auto* sub : {coords, dims, classify_cmd, fiber}) {
    sub->add_option("--flag", job.flag_text, "flag as JSON list of 1-based index lists");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*measure) return cmd_measure(job, out);
    if (*flags) return cmd_flags(job, out);
    if (*coords) return cmd_coords(job, out, err);
    if (*dims) return cmd_dims(job, out, err);
    if (*etale) return cmd_etale(job, out);
    if (*classify_cmd) return cmd_classify(job, out, err);
    if (*fiber) return cmd_fiber(job, out, err);
    if (*oracle) return cmd_oracle(job, out);
    if (*check) return cmd_check(job, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InconsistencyError& e) {
    err << "inconsistency: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}

}  // namespace aligncorr
