#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "aligncorr/coefficient.hpp"
#include "aligncorr/monomial.hpp"

namespace aligncorr {

/// Element of R / m^N with exact coefficients, or an honest polynomial when
/// no cutoff is set. Never stores zero coefficients or monomials of degree >= N.
class TruncatedPolynomial {
 public:
  using TermMap = std::map<Monomial, Coefficient>;

  explicit TruncatedPolynomial(std::size_t vars, std::optional<std::uint32_t> cutoff = std::nullopt);

  static TruncatedPolynomial constant(std::size_t vars, const Coefficient& c,
                                     std::optional<std::uint32_t> cutoff = std::nullopt);
  static TruncatedPolynomial variable(std::size_t vars, std::size_t index,
                                     std::optional<std::uint32_t> cutoff = std::nullopt,
                                     std::uint32_t characteristic = 0);
  static TruncatedPolynomial term(const Monomial& m, const Coefficient& c,
                                  std::optional<std::uint32_t> cutoff = std::nullopt);

  std::size_t vars() const { return vars_; }
  std::optional<std::uint32_t> cutoff() const { return cutoff_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coefficient coefficient(const Monomial& m) const;
  /// Smallest degree of a nonzero term (0 for the zero polynomial).
  std::uint64_t order() const;

  void add_term(const Monomial& m, const Coefficient& c);
  TruncatedPolynomial truncated(std::optional<std::uint32_t> cutoff) const;

  TruncatedPolynomial operator-() const;
  TruncatedPolynomial& operator+=(const TruncatedPolynomial& other);
  TruncatedPolynomial& operator-=(const TruncatedPolynomial& other);
  friend TruncatedPolynomial operator+(TruncatedPolynomial a, const TruncatedPolynomial& b) {
    return a += b;
  }
  friend TruncatedPolynomial operator-(TruncatedPolynomial a, const TruncatedPolynomial& b) {
    return a -= b;
  }
  friend TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b);
  TruncatedPolynomial scaled(const Coefficient& c) const;
  TruncatedPolynomial pow(std::uint64_t k) const;

  /// Same terms; cutoffs are not compared.
  friend bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b);

  std::string to_string(std::span<const std::string> parameter_names = {}) const;

 private:
  std::size_t vars_;
  std::optional<std::uint32_t> cutoff_;
  TermMap terms_;
};

std::optional<std::uint32_t> min_cutoff(std::optional<std::uint32_t> a,
                                        std::optional<std::uint32_t> b);

/// sum c_m prod values[k]^{m_k}, with coefficient-valued arguments.
Coefficient evaluate(const TruncatedPolynomial& f, std::span<const Coefficient> values);

}  // namespace aligncorr
