#include "aligncorr/fiber.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <sstream>

#include "aligncorr/errors.hpp"
#include "aligncorr/linear_algebra.hpp"
#include "aligncorr/text.hpp"

namespace aligncorr {

Substitution coset_parametrization(const CoordinateSet& coords, std::size_t vars,
                                   std::uint32_t characteristic) {
  std::vector<TruncatedPolynomial> images;
  for (std::size_t i = 0; i < vars; ++i) {
    images.push_back(TruncatedPolynomial::variable(vars, i, std::nullopt, characteristic));
  }
  for (std::size_t k = 0; k < coords.size(); ++k) {
    images[coords[k].i].add_term(coords[k].v, Coefficient::parameter(k, characteristic));
  }
  return Substitution(std::move(images));
}

namespace {

TruncatedPolynomial image_of(const Monomial& m, const Substitution& g, std::uint32_t cutoff) {
  return substitute(TruncatedPolynomial::term(m, Coefficient::one(), cutoff), g);
}

std::vector<Monomial> sorted_graded_lex(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), graded_lex_before);
  return ms;
}

void require_cutoff(const MonomialIdeal& ideal, std::uint32_t cutoff) {
  if (!ideal.contains(MonomialIdeal::maximal_power(ideal.vars(), cutoff))) {
    throw CutoffTooSmall("m^" + std::to_string(cutoff) + " is not inside " + format_ideal(ideal));
  }
}

}  // namespace

QuotientFrame quotient_frame(const MonomialIdeal& ideal, const Substitution& g, std::uint32_t cutoff) {
  require_cutoff(ideal, cutoff);
  const std::size_t n = ideal.vars();
  const auto below = monomials_below(n, cutoff);

  std::vector<Monomial> j1_gens = ideal.generators();
  for (const auto& s : below) {
    if (!ideal.contains(s)) continue;
    const auto image = image_of(s, g, cutoff);
    for (const auto& [m, c] : image.terms()) j1_gens.push_back(m);
  }

  // m lies in g(I) identically in the parameters iff g^{-1}(m) lies in I.
  const Substitution inverse = invert(g, cutoff);
  std::vector<Monomial> j2_gens = MonomialIdeal::maximal_power(n, cutoff).generators();
  for (const auto& m : below) {
    if (!ideal.contains(m)) continue;
    const auto pre = image_of(m, inverse, cutoff);
    const bool inside = std::all_of(pre.terms().begin(), pre.terms().end(),
                                    [&](const auto& term) { return ideal.contains(term.first); });
    if (inside) j2_gens.push_back(m);
  }

  QuotientFrame frame{MonomialIdeal(n, std::move(j1_gens)), MonomialIdeal(n, std::move(j2_gens)), {}};
  std::vector<Monomial> basis;
  for (const auto& m : below) {
    if (frame.j1.contains(m) && !frame.j2.contains(m)) basis.push_back(m);
  }
  frame.basis = sorted_graded_lex(std::move(basis));
  return frame;
}

namespace {

void subsets(std::size_t d, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() == k) {
      out.push_back(current);
      return;
    }
    for (std::size_t c = start; c + (k - current.size()) <= d; ++c) {
      current.push_back(c);
      rec(c + 1);
      current.pop_back();
    }
  };
  rec(0);
}

std::vector<Coefficient> minors_of(const std::vector<std::vector<Coefficient>>& rows,
                                   const std::vector<std::vector<std::size_t>>& column_sets) {
  std::vector<Coefficient> out;
  for (const auto& cols : column_sets) {
    std::vector<std::vector<Coefficient>> square;
    for (const auto& row : rows) {
      std::vector<Coefficient> r;
      for (auto c : cols) r.push_back(row[c]);
      square.push_back(std::move(r));
    }
    out.push_back(determinant(square));
  }
  return out;
}

}  // namespace

std::vector<std::string> PluckerFactor::labels() const {
  std::vector<std::string> out;
  for (const auto& cols : column_sets) {
    std::string label = "[";
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (k) label += ", ";
      label += format_monomial(frame.basis[cols[k]]);
    }
    out.push_back(label + "]");
  }
  return out;
}

PluckerFactor plucker_factor(const MonomialIdeal& ideal, const QuotientFrame& frame,
                             const Substitution& g, std::uint32_t cutoff) {
  require_cutoff(ideal, cutoff);
  PluckerFactor f;
  f.ideal = ideal;
  f.frame = frame;
  std::vector<Monomial> rows;
  for (const auto& m : monomials_below(ideal.vars(), cutoff)) {
    if (ideal.contains(m) && !frame.j2.contains(m)) rows.push_back(m);
  }
  f.row_monomials = sorted_graded_lex(std::move(rows));
  {
    // C(d, k) without overflow: stop once past the limit.
    const std::size_t d = frame.basis.size(), rows = f.row_monomials.size();
    const std::size_t k = rows <= d ? std::min(rows, d - rows) : 0;
    std::uint64_t count = 1;
    for (std::size_t r = 1; r <= k && count <= kFactorMinorLimit; ++r) count = count * (d - k + r) / r;
    if (count > kFactorMinorLimit) {
      throw SearchSpaceTooLarge("Plücker factor of " + format_ideal(ideal) + " has more than " +
                                std::to_string(kFactorMinorLimit) + " minors");
    }
  }
  for (const auto& s : f.row_monomials) {
    const auto image = image_of(s, g, cutoff);
    std::vector<Coefficient> row;
    for (const auto& b : frame.basis) row.push_back(image.coefficient(b));
    f.rows.push_back(std::move(row));
  }
  subsets(frame.basis.size(), f.rows.size(), f.column_sets);
  f.minors = minors_of(f.rows, f.column_sets);
  if (std::all_of(f.minors.begin(), f.minors.end(), [](const Coefficient& c) { return c.is_zero(); })) {
    throw RankDeficiency("all maximal minors vanish for " + format_ideal(ideal));
  }
  return f;
}

PluckerMap plucker_map(const MeasuringSequence& a, const FlagSequence& flag) {
  PluckerMap map;
  map.vars = a.vars();
  map.characteristic = a.characteristic;
  map.coords = coordinate_set(a, flag);
  map.parameter_names = parameter_names(map.coords.size());
  const auto g = coset_parametrization(map.coords, map.vars, a.characteristic);
  for (std::size_t j = 0; j < a.source.size(); ++j) {
    const auto& I = a.source[j];
    const std::uint32_t N = nilpotency_index(I);
    auto factor = plucker_factor(I, quotient_frame(I, g, N), g, N);
    factor.ideal_index = j;
    if (!factor.trivial()) map.factors.push_back(std::move(factor));
  }
  map.coordinates = {Coefficient::one(a.characteristic)};
  map.labels = {""};
  std::uint64_t total = 1;
  for (const auto& factor : map.factors) {
    total *= factor.minors.size();
    if (total > kPluckerCoordinateLimit) {
      throw SearchSpaceTooLarge("Plücker map would have more than " +
                                std::to_string(kPluckerCoordinateLimit) + " coordinates");
    }
  }
  for (const auto& factor : map.factors) {
    std::vector<Coefficient> coords;
    std::vector<std::string> labels;
    const auto factor_labels = factor.labels();
    for (std::size_t p = 0; p < map.coordinates.size(); ++p) {
      for (std::size_t q = 0; q < factor.minors.size(); ++q) {
        coords.push_back(map.coordinates[p] * factor.minors[q]);
        labels.push_back(map.labels[p].empty() ? factor_labels[q]
                                               : map.labels[p] + " " + factor_labels[q]);
      }
    }
    map.coordinates = std::move(coords);
    map.labels = std::move(labels);
  }
  if (map.factors.empty()) map.labels = {"1"};
  return map;
}

bool satisfies_plucker_relations(const PluckerFactor& factor) {
  const std::size_t k = factor.rank();
  const std::size_t d = factor.frame.basis.size();
  if (k == 0 || k == d) return true;
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t s = 0; s < factor.column_sets.size(); ++s) index[factor.column_sets[s]] = s;

  // p of an unsorted index sequence: sign of the sorting permutation times p.
  auto coordinate = [&](std::vector<std::size_t> seq) -> Coefficient {
    int sign = 1;
    for (std::size_t a = 0; a < seq.size(); ++a) {
      for (std::size_t b = a + 1; b < seq.size(); ++b) {
        if (seq[a] == seq[b]) return Coefficient();
        if (seq[a] > seq[b]) sign = -sign;
      }
    }
    std::sort(seq.begin(), seq.end());
    const auto& value = factor.minors[index.at(seq)];
    return sign > 0 ? value : -value;
  };

  std::vector<std::vector<std::size_t>> small, large;
  subsets(d, k - 1, small);
  subsets(d, k + 1, large);
  for (const auto& I : small) {
    for (const auto& J : large) {
      Coefficient total;
      for (std::size_t l = 0; l < J.size(); ++l) {
        auto left = I;
        left.push_back(J[l]);
        auto right = J;
        right.erase(right.begin() + static_cast<std::ptrdiff_t>(l));
        const auto term = coordinate(left) * coordinate(right);
        if (l % 2 == 0) total += term;
        else total -= term;
      }
      if (!total.is_zero()) return false;
    }
  }
  return true;
}

std::string ProjectiveForm::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms) {
    std::string mono;
    for (std::size_t i = 0; i < m.vars(); ++i) {
      if (m[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (m[i] > 1) mono += "^" + std::to_string(m[i]);
    }
    const bool negative = c.characteristic() == 0 && sgn(c.value()) < 0;
    const Scalar magnitude = negative ? -c : c;
    if (first) out << (negative ? "-" : "");
    else out << (negative ? " - " : " + ");
    first = false;
    if (!magnitude.is_one()) out << magnitude.to_string() << "*";
    out << mono;
  }
  return first ? "0" : out.str();
}

Coefficient ProjectiveForm::evaluate(const std::vector<Coefficient>& point) const {
  Coefficient total;
  for (const auto& [m, c] : terms) {
    Coefficient term(c);
    for (std::size_t i = 0; i < m.vars(); ++i) {
      if (m[i] > 0) term *= point[i].pow(m[i]);
    }
    total += term;
  }
  return total;
}

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Degree-e monomials in M variables, lexicographically increasing.
std::vector<Monomial> form_columns(std::size_t M, std::uint32_t e) {
  auto ms = monomials_of_degree(M, e);
  std::reverse(ms.begin(), ms.end());
  return ms;
}

ProjectiveForm form_from(const Vector& v, const std::vector<Monomial>& columns, std::uint32_t e) {
  ProjectiveForm f;
  f.degree = e;
  // Scale so that the largest monomial has coefficient 1.
  std::size_t last = v.size();
  for (std::size_t c = v.size(); c-- > 0;) {
    if (!v[c].is_zero()) {
      last = c;
      break;
    }
  }
  const Scalar scale = v[last].inverse();
  for (std::size_t c = v.size(); c-- > 0;) {
    if (!v[c].is_zero()) f.terms.emplace_back(columns[c], v[c] * scale);
  }
  return f;
}

Scalar monomial_value(const Monomial& m, const std::vector<Scalar>& point) {
  Scalar value(1L);
  for (std::size_t i = 0; i < m.vars(); ++i) {
    if (m[i] > 0) value *= point[i].pow(m[i]);
  }
  return value;
}

}  // namespace

std::size_t minimum_samples(std::size_t coordinates, std::uint32_t degree) {
  return binomial(coordinates + degree, degree) + 5;
}

std::size_t default_samples(std::size_t coordinates, std::uint32_t degree) {
  return binomial(coordinates + degree, degree) + 10;
}

ImageEquations interpolate_image_equations(const PluckerMap& map, std::uint32_t degree,
                                           std::optional<std::size_t> samples, std::uint64_t seed) {
  if (map.characteristic != 0) throw InputError("image equations are interpolated over Q only");
  if (degree < 1) throw InputError("degree must be at least 1");
  const std::size_t M = map.coordinates.size();
  const std::size_t s = samples.value_or(default_samples(M, degree));
  if (s < minimum_samples(M, degree)) {
    throw InsufficientSamples(std::to_string(s) + " samples; at least " +
                              std::to_string(minimum_samples(M, degree)) + " are needed");
  }

  std::mt19937_64 rng(seed);
  std::vector<std::vector<Scalar>> points;
  const std::size_t params = map.coords.size();
  for (std::size_t k = 0; k < s; ++k) {
    std::vector<Scalar> values;
    for (std::size_t q = 0; q < params; ++q) {
      values.emplace_back(static_cast<long>(rng() % 61) - 30);
    }
    std::vector<Scalar> point;
    for (const auto& c : map.coordinates) point.push_back(c.evaluate(values));
    points.push_back(std::move(point));
  }

  ImageEquations out;
  out.coordinate_count = M;
  out.samples = s;
  Subspace previous;
  std::vector<Monomial> previous_columns;
  for (std::uint32_t e = 1; e <= degree; ++e) {
    const auto columns = form_columns(M, e);
    std::vector<Vector> rows;
    for (const auto& point : points) {
      Vector row;
      for (const auto& m : columns) row.push_back(monomial_value(m, point));
      rows.push_back(std::move(row));
    }
    const Subspace vanishing = span(nullspace(rows, columns.size()), columns.size());

    std::vector<ProjectiveForm> basis;
    for (const auto& v : vanishing.basis()) {
      auto form = form_from(v, columns, e);
      if (!form.evaluate(map.coordinates).is_zero()) {
        throw InsufficientSamples("interpolated form " + form.to_string() +
                                  " does not vanish on the map; use more samples");
      }
      basis.push_back(std::move(form));
    }

    // Forms that do not come from multiplying lower-degree ones.
    Subspace generated(columns.size());
    if (e > 1) {
      std::map<Monomial, std::size_t> position;
      for (std::size_t c = 0; c < columns.size(); ++c) position[columns[c]] = c;
      for (const auto& v : previous.basis()) {
        for (std::size_t x = 0; x < M; ++x) {
          Vector shifted(columns.size(), Scalar(0L));
          for (std::size_t c = 0; c < v.size(); ++c) {
            if (!v[c].is_zero()) shifted[position.at(previous_columns[c] * Monomial::variable(M, x))] = v[c];
          }
          generated.insert(shifted);
        }
      }
    }
    Subspace fresh(columns.size());
    for (const auto& v : vanishing.basis()) fresh.insert(generated.reduce(v));
    std::vector<ProjectiveForm> new_forms;
    for (const auto& v : fresh.basis()) new_forms.push_back(form_from(v, columns, e));

    out.dimensions.push_back(vanishing.dimension());
    out.bases.push_back(std::move(basis));
    out.new_generators.push_back(std::move(new_forms));
    previous = vanishing;
    previous_columns = columns;
  }
  return out;
}

std::vector<std::vector<long>> coordinate_weights(const CoordinateSet& coords, std::size_t vars) {
  std::vector<std::vector<long>> out;
  for (const auto& c : coords) {
    std::vector<long> w(vars, 0);
    w[c.i] += 1;
    for (std::size_t k = 0; k < vars; ++k) w[k] -= static_cast<long>(c.v[k]);
    out.push_back(std::move(w));
  }
  return out;
}

bool is_weight_homogeneous(const Coefficient& c, const std::vector<std::vector<long>>& weights) {
  std::optional<std::vector<long>> common;
  for (const auto& [exps, value] : c.terms()) {
    const std::size_t dim = weights.empty() ? 0 : weights.front().size();
    std::vector<long> w(dim, 0);
    for (std::size_t k = 0; k < exps.size(); ++k) {
      for (std::size_t d = 0; d < dim; ++d) w[d] += static_cast<long>(exps[k]) * weights[k][d];
    }
    if (!common) common = w;
    else if (*common != w) return false;
  }
  return true;
}

ToricReport toric_check(const PluckerMap& map) {
  ToricReport report;
  const auto weights = coordinate_weights(map.coords, map.vars);
  std::vector<Vector> rows;
  for (const auto& w : weights) {
    Vector row;
    for (long x : w) row.emplace_back(x);
    rows.push_back(std::move(row));
  }
  report.independent = rank(rows, map.vars) == weights.size();
  for (const auto& c : map.coordinates) {
    if (!c.is_zero() && !c.is_monomial()) report.all_monomial = false;
    if (!is_weight_homogeneous(c, weights)) report.homogeneous = false;
  }
  return report;
}

std::vector<BoundaryResult> boundary_probe(const PluckerMap& map, const ImageEquations& equations,
                                           const std::vector<std::string>& parameters,
                                           const std::vector<BoundaryCandidate>& candidates) {
  if (map.factors.size() != 1) {
    throw InputError("boundary probe needs exactly one nontrivial fiber factor, found " +
                     std::to_string(map.factors.size()));
  }
  const auto& factor = map.factors.front();
  const auto& frame = factor.frame;
  std::vector<BoundaryResult> results;
  for (const auto& candidate : candidates) {
    if (candidate.spanning.size() != factor.rank()) {
      throw InputError("candidate '" + candidate.name + "' needs " + std::to_string(factor.rank()) +
                       " spanning vectors");
    }
    std::vector<std::vector<Coefficient>> rows;
    for (const auto& text : candidate.spanning) {
      const auto f = parse_polynomial(text, map.vars, parameters, map.characteristic);
      std::vector<Coefficient> row;
      for (const auto& b : frame.basis) row.push_back(f.coefficient(b));
      for (const auto& [m, c] : f.terms()) {
        if (!frame.j1.contains(m)) {
          throw InputError("candidate '" + candidate.name + "' has the term " + format_monomial(m) +
                           " outside " + format_ideal(frame.j1));
        }
      }
      rows.push_back(std::move(row));
    }
    BoundaryResult result;
    result.name = candidate.name;
    result.point = minors_of(rows, factor.column_sets);
    if (std::all_of(result.point.begin(), result.point.end(),
                    [](const Coefficient& c) { return c.is_zero(); })) {
      throw RankDeficiency("candidate '" + candidate.name + "' does not span a subspace of full rank");
    }
    result.satisfies_equations = true;
    for (const auto& degree_basis : equations.bases) {
      for (const auto& form : degree_basis) {
        if (!form.evaluate(result.point).is_zero()) result.satisfies_equations = false;
      }
    }
    for (std::size_t c = 0; c < map.coordinates.size(); ++c) {
      const auto value = map.coordinates[c].as_constant();
      if (value && !value->is_zero() && result.point[c].is_zero()) result.off_chart = true;
    }
    results.push_back(std::move(result));
  }
  return results;
}

bool projectively_equal(const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
  if (p.size() != q.size()) return false;
  std::optional<Scalar> ratio;
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p[k].is_zero() != q[k].is_zero()) return false;
    if (p[k].is_zero()) continue;
    const Scalar r = p[k] / q[k];
    if (!ratio) ratio = r;
    else if (*ratio != r) return false;
  }
  return ratio.has_value();
}

}  // namespace aligncorr
