#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "aligncorr/linear_algebra.hpp"
#include "aligncorr/monomial_ideal.hpp"
#include "aligncorr/polynomial.hpp"
#include "aligncorr/substitution.hpp"

namespace aligncorr {

/// The monomials of degree < N, indexing coordinates of R / m^N.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t vars, std::uint32_t cutoff);

  std::size_t vars() const { return vars_; }
  std::uint32_t cutoff() const { return cutoff_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  const Monomial& operator[](std::size_t k) const { return monomials_[k]; }
  std::optional<std::size_t> index_of(const Monomial& m) const;

  /// Coordinates of f mod m^N. Coefficients must be constants.
  Vector to_vector(const TruncatedPolynomial& f, std::uint32_t characteristic) const;
  TruncatedPolynomial to_polynomial(const Vector& v) const;

 private:
  std::size_t vars_;
  std::uint32_t cutoff_;
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> index_;
};

/// Span of the monomials of I of degree < N.
Subspace monomial_ideal_space(const MonomialIdeal& ideal, const MonomialBasis& basis,
                              std::uint32_t characteristic = 0);
/// Ideal of R / m^N generated by the given elements.
Subspace ideal_generated_by(const std::vector<Vector>& generators, const MonomialBasis& basis,
                            std::uint32_t characteristic = 0);
Subspace ideal_sum(const Subspace& a, const Subspace& b);
/// Product of two ideals of R / m^N (span of pairwise products).
Subspace ideal_product(const Subspace& a, const Subspace& b, const MonomialBasis& basis);
/// Ideal generated by p-th powers of the elements of a (characteristic p).
Subspace ideal_frobenius(const Subspace& a, const MonomialBasis& basis);
/// True iff the span is closed under multiplication by every variable.
bool is_ideal(const Subspace& a, const MonomialBasis& basis);

/// s(I) + m^N as a subspace of R / m^N. Requires m^N inside I (CutoffTooSmall).
Subspace ideal_image_space(const Substitution& s, const MonomialIdeal& ideal, std::uint32_t cutoff);
/// s(I) mod m^N without the containment requirement.
Subspace ideal_image_mod(const Substitution& s, const MonomialIdeal& ideal,
                         const MonomialBasis& basis);

/// Characteristic of the coefficients of a substitution (0 if none set one).
std::uint32_t substitution_characteristic(const Substitution& s);

}  // namespace aligncorr
