#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "aligncorr/flags.hpp"
#include "aligncorr/substitution.hpp"

namespace aligncorr {

/// g(x_i) = x_i + sum over (i,v) of a_{i,v} x^v, with a_{i,v} the parameter
/// whose index is the position of (i,v) in `coords`.
Substitution coset_parametrization(const CoordinateSet& coords, std::size_t vars,
                                   std::uint32_t characteristic = 0);

/// J2 inside g(I) inside J1 identically in the parameters; the frame basis is
/// the monomials of J1 outside J2, in descending graded-lex order.
struct QuotientFrame {
  MonomialIdeal j1;
  MonomialIdeal j2;
  std::vector<Monomial> basis;
};

QuotientFrame quotient_frame(const MonomialIdeal& ideal, const Substitution& g, std::uint32_t cutoff);

/// Bounds on the number of maximal minors per factor and on the Segre
/// product; larger maps throw SearchSpaceTooLarge.
constexpr std::size_t kFactorMinorLimit = 2000;
constexpr std::size_t kPluckerCoordinateLimit = 20000;

/// Plücker data of g(I) / J2 inside J1 / J2.
struct PluckerFactor {
  std::size_t ideal_index = 0;
  MonomialIdeal ideal;
  QuotientFrame frame;
  /// Monomials s of I outside J2; row r is g(s_r) mod J2 in frame coordinates.
  std::vector<Monomial> row_monomials;
  std::vector<std::vector<Coefficient>> rows;
  /// k-subsets of frame columns in lexicographic order, and the matching minors.
  std::vector<std::vector<std::size_t>> column_sets;
  std::vector<Coefficient> minors;

  std::size_t rank() const { return rows.size(); }
  bool trivial() const { return rows.empty() || rows.size() == frame.basis.size(); }
  std::vector<std::string> labels() const;
};

PluckerFactor plucker_factor(const MonomialIdeal& ideal, const QuotientFrame& frame,
                             const Substitution& g, std::uint32_t cutoff);

/// Full fiber map: Segre product of the nontrivial factors over the input ideals.
struct PluckerMap {
  std::size_t vars = 0;
  std::uint32_t characteristic = 0;
  CoordinateSet coords;
  std::vector<std::string> parameter_names;
  std::vector<PluckerFactor> factors;  ///< nontrivial factors only
  std::vector<Coefficient> coordinates;
  std::vector<std::string> labels;
};

PluckerMap plucker_map(const MeasuringSequence& a, const FlagSequence& flag);

/// Sum_{l} (-1)^l p_{I+j_l} p_{J-j_l} = 0 for every (k-1)-set I and (k+1)-set J.
bool satisfies_plucker_relations(const PluckerFactor& factor);

/// Homogeneous form in the projective coordinates x0..x(M-1).
struct ProjectiveForm {
  std::vector<std::pair<Monomial, Scalar>> terms;  ///< largest monomial first
  std::uint32_t degree = 0;
  std::string to_string() const;
  Coefficient evaluate(const std::vector<Coefficient>& point) const;
};

struct ImageEquations {
  std::size_t coordinate_count = 0;
  std::size_t samples = 0;
  /// Dimension of the space of vanishing forms in each degree 1..d.
  std::vector<std::size_t> dimensions;
  /// Forms in degree e not generated by lower-degree ones, per degree.
  std::vector<std::vector<ProjectiveForm>> new_generators;
  /// Full basis of vanishing forms per degree.
  std::vector<std::vector<ProjectiveForm>> bases;
};

std::size_t minimum_samples(std::size_t coordinates, std::uint32_t degree);
std::size_t default_samples(std::size_t coordinates, std::uint32_t degree);

/// Vanishing forms of degree <= d found from seeded random specializations
/// over Q, each verified by exact substitution into the map.
ImageEquations interpolate_image_equations(const PluckerMap& map, std::uint32_t degree,
                                           std::optional<std::size_t> samples, std::uint64_t seed);

/// Weight e_i - v of the coordinate a_{i,v}.
std::vector<std::vector<long>> coordinate_weights(const CoordinateSet& coords, std::size_t vars);

struct ToricReport {
  bool independent = true;
  bool all_monomial = true;
  bool homogeneous = true;
};

ToricReport toric_check(const PluckerMap& map);
bool is_weight_homogeneous(const Coefficient& c, const std::vector<std::vector<long>>& weights);

struct BoundaryCandidate {
  std::string name;
  std::vector<std::string> spanning;  ///< polynomials in x1..xn and named parameters
};

struct BoundaryResult {
  std::string name;
  std::vector<Coefficient> point;
  bool satisfies_equations = false;
  /// Vanishes at a coordinate that is a nonzero constant on the whole map.
  bool off_chart = false;
};

/// Plücker points of candidate subspaces of J1/J2, checked against the equations.
std::vector<BoundaryResult> boundary_probe(const PluckerMap& map, const ImageEquations& equations,
                                           const std::vector<std::string>& parameters,
                                           const std::vector<BoundaryCandidate>& candidates);

/// Equal up to a nonzero scalar (constant coordinates only).
bool projectively_equal(const std::vector<Scalar>& p, const std::vector<Scalar>& q);

}  // namespace aligncorr
