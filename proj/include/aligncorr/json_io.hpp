#pragma once

#include <json.hpp>

#include "aligncorr/classifier.hpp"
#include "aligncorr/fiber.hpp"
#include "aligncorr/flags.hpp"
#include "aligncorr/measuring.hpp"

namespace aligncorr {

using json = nlohmann::ordered_json;

// External JSON uses 1-based variable indices; monomials are exponent arrays
// and ideals are arrays of exponent arrays.

json to_json(const Monomial& m);
Monomial monomial_from_json(const json& j);

json to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const json& j, std::size_t vars);

/// {"Q": "n/d"} or {"Fp": k}.
json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j);

/// Constants as scalars; otherwise {"Poly": [[exponents, scalar], ...]}.
json to_json(const Coefficient& c);
Coefficient coefficient_from_json(const json& j);

json to_json(const FlagSequence& flag);
FlagSequence flag_from_json(const json& j);

json to_json(const CoordinateSet& coords);
CoordinateSet coordinates_from_json(const json& j);

json to_json(const UniversalityVerdict& v);
UniversalityVerdict verdict_from_json(const json& j);

json to_json(const MeasuringSequence& a);
MeasuringSequence measuring_from_json(const json& j);

json to_json(const ProjectiveForm& f);

}  // namespace aligncorr
