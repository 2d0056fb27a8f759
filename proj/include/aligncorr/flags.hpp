#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aligncorr/measuring.hpp"

namespace aligncorr {

/// x_i <= x_j iff x_i lies in A_j.
class VariablePreorder {
 public:
  explicit VariablePreorder(std::vector<std::vector<bool>> leq);

  std::size_t vars() const { return leq_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return leq_[i][j]; }
  bool less(std::size_t i, std::size_t j) const { return leq_[i][j] && !leq_[j][i]; }
  bool equivalent(std::size_t i, std::size_t j) const { return leq_[i][j] && leq_[j][i]; }
  /// Equivalence classes, each sorted, ordered by smallest member.
  std::vector<std::vector<std::size_t>> classes() const;
  /// Index into classes() for each variable.
  std::vector<std::size_t> class_of() const;
  const std::vector<std::vector<bool>>& matrix() const { return leq_; }

 private:
  std::vector<std::vector<bool>> leq_;
};

/// Throws NonTransitiveRelation if the relation read off A is not a preorder.
VariablePreorder preorder_from_measuring(const MeasuringSequence& a);

/// Ordered partition of the variables, lowest class first. B_k is generated by
/// the variables of the first k classes together with m^2.
struct FlagSequence {
  std::vector<std::vector<std::size_t>> classes;

  std::size_t vars() const;
  std::vector<MonomialIdeal> ideals() const;
  /// Position of each variable's class in the flag.
  std::vector<std::size_t> positions() const;
  friend auto operator<=>(const FlagSequence&, const FlagSequence&) = default;
};

/// Total preorders extending `pre` without merging classes, sorted
/// lexicographically; the first one is the default.
std::vector<FlagSequence> enumerate_completions(const VariablePreorder& pre);
bool is_completion(const VariablePreorder& pre, const FlagSequence& flag);

struct CoordinatePair {
  std::size_t i = 0;
  Monomial v;
  friend bool operator==(const CoordinatePair&, const CoordinatePair&) = default;
};
using CoordinateSet = std::vector<CoordinatePair>;

/// Pairs (i, v) with x^v outside A_i, 1 <= |v| < N0, and x^v strictly below x_i
/// in the flag when |v| = 1. Sorted by i, then degree, then lexicographically
/// decreasing. Throws IncompatibleFlag.
CoordinateSet coordinate_set(const MeasuringSequence& a, const FlagSequence& flag);

/// Display names for fiber coordinates: a, b, c, ... (skipping t and x), then a_k.
std::vector<std::string> parameter_names(std::size_t count);

std::size_t total_dimension(const MeasuringSequence& a);
std::size_t total_dimension(const std::vector<MonomialIdeal>& ideals, std::uint32_t characteristic);

struct DimensionDecomposition {
  std::size_t base = 0;
  std::size_t flag_dim = 0;
  std::size_t coord_count = 0;
  std::size_t total() const { return base + flag_dim + coord_count; }
};

DimensionDecomposition fiber_dimension_decomposition(const MeasuringSequence& a,
                                                     const FlagSequence& flag);

/// Permutation sigma acts by x_i -> x_{sigma(i)}.
MonomialIdeal permute(const MonomialIdeal& ideal, const std::vector<std::size_t>& sigma);

struct EtaleReport {
  std::size_t stabilizer = 0;  ///< permutations fixing every I_j
  std::size_t fixing_measuring = 0;  ///< those also fixing every A_i
  std::size_t degree() const { return stabilizer / fixing_measuring; }
};

EtaleReport etale_report(const MeasuringSequence& a);
std::size_t etale_degree(const std::vector<MonomialIdeal>& ideals, std::uint32_t characteristic);

/// Monomials are equivalent iff they have the same degree in each variable class.
bool monomials_equivalent(const Monomial& v, const Monomial& w, const VariablePreorder& pre);

/// Partition of coordinate indices: (i,v) ~ (j,w) iff x_i ~ x_j and x^v ~ x^w.
std::vector<std::vector<std::size_t>> coordinate_equivalence(const CoordinateSet& coords,
                                                             const VariablePreorder& pre);

}  // namespace aligncorr
