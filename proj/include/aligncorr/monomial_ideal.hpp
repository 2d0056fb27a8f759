#pragma once

#include <cstdint>
#include <vector>

#include "aligncorr/monomial.hpp"

namespace aligncorr {

/// A monomial ideal of R = K[[x_1..x_n]] kept as its minimal generating set.
///
/// Generators are sorted low degree first (lexicographically larger first
/// within a degree) so that two ideals are equal iff their generator lists are
/// equal. The unit
/// ideal is generated by the empty monomial.
class MonomialIdeal {
 public:
  MonomialIdeal() : vars_(0) {}
  explicit MonomialIdeal(std::size_t vars, std::vector<Monomial> generators = {});

  static MonomialIdeal unit(std::size_t vars);
  static MonomialIdeal maximal(std::size_t vars);
  /// m^d.
  static MonomialIdeal maximal_power(std::size_t vars, std::uint32_t degree);

  std::size_t vars() const { return vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_unit() const;
  bool is_zero() const { return generators_.empty(); }

  bool contains(const Monomial& f) const;
  /// J subset of this ideal.
  bool contains(const MonomialIdeal& other) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t vars_;
  std::vector<Monomial> generators_;
};

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, std::uint32_t k);
/// Ideal generated by g^{p^k} over the generators g.
MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::uint32_t p, std::uint32_t k);

/// Smallest d_i with x_i^{d_i} in the ideal; throws InfiniteColength if absent.
std::vector<std::uint32_t> pure_power_degrees(const MonomialIdeal& ideal);
bool has_finite_colength(const MonomialIdeal& ideal);
/// Monomials outside the ideal, low degree first (1 first).
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal);
std::size_t colength(const MonomialIdeal& ideal);
/// Least N with m^N contained in the ideal.
std::uint32_t nilpotency_index(const MonomialIdeal& ideal);

}  // namespace aligncorr
