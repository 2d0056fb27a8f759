#include "aligncorr/json_io.hpp"

#include "aligncorr/errors.hpp"

namespace aligncorr {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

}  // namespace

json to_json(const Monomial& m) { return json(m.exponents()); }

Monomial monomial_from_json(const json& j) {
  return guarded("monomial", [&] { return Monomial(j.get<std::vector<std::uint32_t>>()); });
}

json to_json(const MonomialIdeal& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(to_json(g));
  return out;
}

MonomialIdeal ideal_from_json(const json& j, std::size_t vars) {
  return guarded("ideal", [&] {
    std::vector<Monomial> gens;
    for (const auto& g : j) {
      gens.push_back(monomial_from_json(g));
      if (gens.back().vars() != vars) throw DimensionMismatch("ideal JSON: wrong exponent length");
    }
    return MonomialIdeal(vars, std::move(gens));
  });
}

json to_json(const Scalar& s) {
  if (s.characteristic() == 0) return json{{"Q", s.to_string()}};
  return json{{"Fp", std::stoul(s.to_string())}, {"p", s.characteristic()}};
}

Scalar scalar_from_json(const json& j) {
  return guarded("scalar", [&] {
    if (j.contains("Q")) {
      mpq_class q(j.at("Q").get<std::string>());
      q.canonicalize();
      return Scalar(q, 0);
    }
    return Scalar(j.at("Fp").get<long>(), j.at("p").get<std::uint32_t>());
  });
}

json to_json(const Coefficient& c) {
  if (auto k = c.as_constant()) return to_json(*k);
  json terms = json::array();
  for (const auto& [exps, value] : c.terms()) terms.push_back(json::array({json(exps), to_json(value)}));
  return json{{"Poly", terms}};
}

Coefficient coefficient_from_json(const json& j) {
  return guarded("coefficient", [&] {
    if (!j.contains("Poly")) return Coefficient(scalar_from_json(j));
    Coefficient out;
    for (const auto& term : j.at("Poly")) {
      out += Coefficient::term(scalar_from_json(term.at(1)),
                               term.at(0).get<std::vector<std::uint32_t>>());
    }
    return out;
  });
}

json to_json(const FlagSequence& flag) {
  json out = json::array();
  for (const auto& cls : flag.classes) {
    json c = json::array();
    for (auto i : cls) c.push_back(i + 1);
    out.push_back(c);
  }
  return out;
}

FlagSequence flag_from_json(const json& j) {
  return guarded("flag", [&] {
    FlagSequence flag;
    for (const auto& cls : j) {
      std::vector<std::size_t> c;
      for (const auto& i : cls) {
        const auto k = i.get<std::size_t>();
        if (k == 0) throw ParseError("flag JSON: variables are numbered from 1");
        c.push_back(k - 1);
      }
      flag.classes.push_back(std::move(c));
    }
    return flag;
  });
}

json to_json(const CoordinateSet& coords) {
  json out = json::array();
  for (const auto& c : coords) out.push_back({{"i", c.i + 1}, {"v", to_json(c.v)}});
  return out;
}

CoordinateSet coordinates_from_json(const json& j) {
  return guarded("coordinate", [&] {
    CoordinateSet out;
    for (const auto& c : j) out.push_back({c.at("i").get<std::size_t>() - 1, monomial_from_json(c.at("v"))});
    return out;
  });
}

json to_json(const UniversalityVerdict& v) {
  json out{{"verdict", to_string(v.kind)}};
  if (v.kind == UniversalityVerdict::Kind::Dominates || v.kind == UniversalityVerdict::Kind::Unresolved) {
    out["case"] = v.shape;
    out["m"] = v.m;
    out["l"] = v.l;
  }
  return out;
}

UniversalityVerdict verdict_from_json(const json& j) {
  return guarded("verdict", [&] {
    UniversalityVerdict v;
    v.kind = verdict_kind_from_string(j.at("verdict").get<std::string>());
    if (j.contains("case")) {
      v.shape = j.at("case").get<int>();
      v.m = j.at("m").get<std::size_t>();
      v.l = j.at("l").get<std::size_t>();
    }
    return v;
  });
}

json to_json(const MeasuringSequence& a) {
  json source = json::array(), ideals = json::array();
  for (const auto& I : a.source) source.push_back(to_json(I));
  for (const auto& A : a.ideals) ideals.push_back(to_json(A));
  return json{{"characteristic", a.characteristic},
              {"cutoff", a.cutoff},
              {"source", source},
              {"measuring", ideals}};
}

MeasuringSequence measuring_from_json(const json& j) {
  return guarded("measuring", [&] {
    MeasuringSequence a;
    a.characteristic = j.at("characteristic").get<std::uint32_t>();
    a.cutoff = j.at("cutoff").get<std::uint32_t>();
    const auto& ideals = j.at("measuring");
    const std::size_t n = ideals.size();
    for (const auto& I : j.at("source")) a.source.push_back(ideal_from_json(I, n));
    for (const auto& A : ideals) a.ideals.push_back(ideal_from_json(A, n));
    return a;
  });
}

json to_json(const ProjectiveForm& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms) terms.push_back(json::array({to_json(m), to_json(c)}));
  return json{{"text", f.to_string()}, {"degree", f.degree}, {"terms", terms}};
}

}  // namespace aligncorr
