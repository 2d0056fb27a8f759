#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aligncorr/monomial_ideal.hpp"
#include "aligncorr/substitution.hpp"

namespace aligncorr {

/// A_1..A_n for an input sequence I_1..I_r in a given characteristic.
struct MeasuringSequence {
  std::vector<MonomialIdeal> ideals;
  std::uint32_t characteristic = 0;
  std::vector<MonomialIdeal> source;
  /// N0: the largest nilpotency index among the source ideals.
  std::uint32_t cutoff = 1;

  std::size_t vars() const { return ideals.size(); }
  const MonomialIdeal& operator[](std::size_t i) const { return ideals[i]; }
};

/// Checks that the sequence is nonempty, shares one ambient dimension and has
/// finite colength everywhere. Returns the ambient dimension.
std::size_t validate_sequence(const std::vector<MonomialIdeal>& ideals);
void validate_characteristic(std::uint32_t characteristic);
std::uint32_t max_nilpotency(const std::vector<MonomialIdeal>& ideals);

/// x_i -> x_i + t f (t transcendental) preserves every ideal.
bool satisfies_elementary_test(std::size_t i, const Monomial& f,
                               const std::vector<MonomialIdeal>& ideals,
                               std::uint32_t characteristic);

MeasuringSequence measuring_sequence(const std::vector<MonomialIdeal>& ideals,
                                     std::uint32_t characteristic);

/// Characteristic-0 description: f in A_i iff (I_j : x_i) is inside (I_j : f) for all j.
MeasuringSequence measuring_char0_colon(const std::vector<MonomialIdeal>& ideals);

/// Every monomial of A_i below N0 (other than x_i) passes the elementary test
/// on its own, i.e. the set of passing monomials is already an ideal.
bool passing_set_is_ideal(const MeasuringSequence& a);

/// A(alpha) = A^{v_0} F(A^{v_1}) ... F^m(A^{v_m}) with alpha = sum p^k v_k.
MonomialIdeal product_ideal(const MeasuringSequence& a, const Monomial& alpha);

struct ContainmentCheck {
  std::size_t ideal_index = 0;
  Monomial generator;
  bool contained = false;
};

/// A(alpha) inside I_j for each minimal generator x^alpha of each I_j.
std::vector<ContainmentCheck> verify_product_containment(const MeasuringSequence& a);

/// Sum over generators x^alpha of I_j of a(alpha), with a_i = g(A_i), equals
/// g(I_j) as subspaces of R / m^N. g must have constant coefficients.
bool verify_induced_map(const Substitution& g, const MonomialIdeal& ideal,
                        const MeasuringSequence& a, std::uint32_t cutoff);

struct TrialReport {
  std::size_t trials = 0;
  std::size_t failures = 0;
  std::vector<std::string> details;
  bool passed() const { return failures == 0; }
};

/// Random substitutions sending each x_i into A_i must preserve every A_j;
/// substitutions pushing some x_i outside A_i must break some A_j.
TrialReport verify_membership_criterion(const MeasuringSequence& a, std::size_t trials, std::uint64_t seed);

/// Random automorphism with rational coefficients, used for the induced-map check.
Substitution random_automorphism(std::size_t vars, std::uint32_t cutoff,
                                 std::uint32_t characteristic, std::uint64_t seed);

}  // namespace aligncorr
