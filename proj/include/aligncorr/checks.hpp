#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aligncorr/measuring.hpp"

namespace aligncorr {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t trials = 50;
};

/// Every structural property that can be verified on one input sequence.
std::vector<CheckOutcome> run_property_suite(const std::vector<MonomialIdeal>& ideals,
                                             std::uint32_t characteristic,
                                             const SuiteOptions& options = {});

/// Coset-uniqueness: compose(g, h) leaves normal form for g a specialized coset
/// representative and h a non-identity element sending each x_i into A_i.
CheckOutcome check_coset_uniqueness(const MeasuringSequence& a, std::size_t trials,
                                    std::uint64_t seed);

/// Random finite-colength sequence with n variables and ideals of colength <= max_colength.
std::vector<MonomialIdeal> random_ideal_sequence(std::size_t vars, std::size_t count,
                                                 std::size_t max_colength, std::uint64_t seed);

}  // namespace aligncorr
