#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "aligncorr/monomial_ideal.hpp"
#include "aligncorr/polynomial.hpp"

namespace aligncorr {

/// Endomorphism of R given by the images of x_1..x_n, optionally truncated
/// at a cutoff N. Construction checks that the images have no constant term
/// and that the linear part has nonzero determinant.
class Substitution {
 public:
  explicit Substitution(std::vector<TruncatedPolynomial> images,
                        std::optional<std::uint32_t> cutoff = std::nullopt);

  static Substitution identity(std::size_t vars, std::optional<std::uint32_t> cutoff = std::nullopt,
                               std::uint32_t characteristic = 0);

  std::size_t vars() const { return images_.size(); }
  std::optional<std::uint32_t> cutoff() const { return cutoff_; }
  const std::vector<TruncatedPolynomial>& images() const { return images_; }
  const TruncatedPolynomial& image(std::size_t i) const { return images_[i]; }

  /// Row i holds the coefficients of x_1..x_n in the image of x_i.
  std::vector<std::vector<Coefficient>> linear_part() const;

  friend bool operator==(const Substitution& a, const Substitution& b) {
    return a.images_ == b.images_;
  }

 private:
  std::vector<TruncatedPolynomial> images_;
  std::optional<std::uint32_t> cutoff_;
};

Coefficient determinant(const std::vector<std::vector<Coefficient>>& matrix);

/// f(s(x_1), ..., s(x_n)), truncated at the smaller of the two cutoffs.
TruncatedPolynomial substitute(const TruncatedPolynomial& f, const Substitution& s);

/// The substitution applying `inner` first and then `outer`:
/// result(x_i) = outer applied to inner(x_i).
Substitution compose(const Substitution& outer, const Substitution& inner);

/// Inverse modulo m^N. N defaults to the substitution's own cutoff; one of
/// them must be set. Throws SingularLinearPart unless the linear part has a
/// nonzero constant determinant.
Substitution invert(const Substitution& s, std::optional<std::uint32_t> cutoff = std::nullopt);

/// x_i -> x_i + c*f with c the parameter t (generic) or 1; other variables fixed.
Substitution elementary(std::size_t vars, std::size_t index, const Monomial& f, bool generic,
                        std::uint32_t characteristic = 0,
                        std::optional<std::uint32_t> cutoff = std::nullopt);

/// Every monomial occurring in s(g), g a generator of I, lies in I.
bool preserves_ideal(const Substitution& s, const MonomialIdeal& ideal);

}  // namespace aligncorr
