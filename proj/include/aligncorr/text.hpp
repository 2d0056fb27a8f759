#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "aligncorr/monomial.hpp"
#include "aligncorr/monomial_ideal.hpp"
#include "aligncorr/polynomial.hpp"

namespace aligncorr {

// Grammar:
//   monomial := "1" | factor ("*" factor)*      factor := "x" <k> ["^" <e>]
//   ideal    := "[" [monomial ("," monomial)*] "]"
//   sequence := ideal (";" ideal)*
// Variables are 1-based (x1, x2, ...). Whitespace is ignored.

Monomial parse_monomial(std::string_view text, std::size_t vars);
MonomialIdeal parse_ideal(std::string_view text, std::size_t vars);
/// When `vars` is not given, it is the largest variable index in the text.
std::vector<MonomialIdeal> parse_ideal_sequence(std::string_view text,
                                                std::optional<std::size_t> vars = std::nullopt);

/// Polynomial in x1..xn whose coefficients may involve named parameters,
/// e.g. "alpha*x1*x2 + beta*x2^2 - 3/2*x2^3". Parameter k is parameters[k].
TruncatedPolynomial parse_polynomial(std::string_view text, std::size_t vars,
                                     const std::vector<std::string>& parameters,
                                     std::uint32_t characteristic = 0);

std::string format_monomial(const Monomial& m);
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_ideal_sequence(const std::vector<MonomialIdeal>& ideals);

}  // namespace aligncorr
