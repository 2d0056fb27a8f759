#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aligncorr/monomial_ideal.hpp"

namespace aligncorr {

// Brute-force cross-checks. These deliberately avoid the substitution and
// linear-algebra code used elsewhere in the library.

struct TangentResult {
  std::size_t dimension = 0;
  std::uint32_t cutoff = 0;
};

/// Characteristic 0: rank of D -> (D(g) mod I_j) over derivations
/// D = sum f_i d/dx_i with f_i in R / m^N. Confirms stability at N+1 and
/// retries once at a larger N; throws CutoffTooSmall otherwise.
TangentResult tangent_orbit_dimension(const std::vector<MonomialIdeal>& ideals,
                                      std::optional<std::uint32_t> cutoff = std::nullopt);

/// Number of substitutions visited by enumerate_images.
std::uint64_t enumeration_size(std::size_t vars, std::uint32_t p, std::uint32_t cutoff);
constexpr std::uint64_t kEnumerationLimit = std::uint64_t{1} << 21;

/// All x_i -> c x_i + (terms of degree 1..N-1) over F_p fixing the other
/// variables and preserving every I_j; returns the ideal generated by the
/// monomials occurring in those images, plus m^N.
MonomialIdeal enumerate_images(std::size_t i, const std::vector<MonomialIdeal>& ideals,
                               std::uint32_t p, std::uint32_t cutoff);

/// Orders of the classes of a preorder that respect it, counted by trying
/// every permutation of the classes.
std::size_t count_linear_extensions(const std::vector<std::vector<bool>>& leq);

}  // namespace aligncorr
