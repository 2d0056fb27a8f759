#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aligncorr/flags.hpp"

namespace aligncorr {

struct UniversalityVerdict {
  enum class Kind { NonUniversal, Dominates, TrivialFiber, Unresolved };
  Kind kind = Kind::TrivialFiber;
  /// Shape of the single coordinate class (1..4); 0 when not applicable.
  int shape = 0;
  std::size_t m = 0;  ///< size of the class of x_i
  std::size_t l = 0;  ///< size of the class of x_j
  friend bool operator==(const UniversalityVerdict&, const UniversalityVerdict&) = default;
};

std::string to_string(UniversalityVerdict::Kind kind);
UniversalityVerdict::Kind verdict_kind_from_string(const std::string& name);

/// Decision procedure on the coordinates of the given flag.
UniversalityVerdict classify(const MeasuringSequence& a, const FlagSequence& flag);
/// Uses the lexicographically least flag completion.
UniversalityVerdict classify(const std::vector<MonomialIdeal>& ideals, std::uint32_t characteristic);

}  // namespace aligncorr
