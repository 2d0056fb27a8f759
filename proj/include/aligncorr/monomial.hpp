#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace aligncorr {

class WeightVector;

/// Exponent vector of a monomial x^v = x_1^{v_1} ... x_n^{v_n}.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  static Monomial unit(std::size_t vars) { return Monomial(std::vector<std::uint32_t>(vars, 0)); }
  static Monomial variable(std::size_t vars, std::size_t index, std::uint32_t power = 1);

  std::size_t vars() const { return exponents_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exponents_[i]; }
  const std::vector<std::uint32_t>& exponents() const { return exponents_; }

  std::uint64_t degree() const;
  std::uint64_t weighted_degree(const WeightVector& weights) const;
  bool is_unit() const { return degree() == 0; }

  Monomial operator*(const Monomial& other) const;
  Monomial pow(std::uint64_t k) const;

  /// Lexicographic on exponent vectors (x_1 most significant).
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Componentwise f <= g. Throws DimensionMismatch when the ambient counts differ.
bool divides(const Monomial& f, const Monomial& g);
Monomial lcm(const Monomial& f, const Monomial& g);
/// Componentwise max(f - g, 0): the generator of ((f) : g).
Monomial colon(const Monomial& f, const Monomial& g);

/// Higher degree first, then lexicographically larger first. This is the
/// order used for every displayed list of monomials.
bool graded_lex_before(const Monomial& a, const Monomial& b);

/// All monomials of total degree d in n variables, lexicographically decreasing.
std::vector<Monomial> monomials_of_degree(std::size_t vars, std::uint32_t degree);
/// All monomials of degree < cutoff, by increasing degree.
std::vector<Monomial> monomials_below(std::size_t vars, std::uint32_t cutoff);

/// Positive integer weights on the variables.
class WeightVector {
 public:
  explicit WeightVector(std::vector<std::uint32_t> weights);
  static WeightVector uniform(std::size_t vars) {
    return WeightVector(std::vector<std::uint32_t>(vars, 1));
  }
  std::size_t vars() const { return weights_.size(); }
  std::uint32_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }

 private:
  std::vector<std::uint32_t> weights_;
};

/// Weighted degrees (a_0, ..., a_m) of the p-th-power-free layers of a monomial
/// f = f_0 f_1^p ... f_m^{p^m}. In characteristic 0 this is the single entry
/// (wt f). Trailing zeros are trimmed, but at least one entry is kept.
struct ExponentType {
  std::vector<std::uint64_t> parts;
  std::uint32_t characteristic = 0;

  friend bool operator==(const ExponentType&, const ExponentType&) = default;
};

ExponentType exponent_type(const Monomial& f, std::uint32_t characteristic,
                           const WeightVector& weights);
ExponentType exponent_type(const Monomial& f, std::uint32_t characteristic);

/// The layer monomials f_0, f_1, ... (base-p digits of the exponents).
std::vector<Monomial> exponent_layers(const Monomial& f, std::uint32_t characteristic);

/// Partial-sum order on exponent types: s <= t iff sum_{i<=k} s_i p^i <=
/// sum_{i<=k} t_i p^i for all k, with equality at the last k.
bool exponent_type_leq(const ExponentType& s, const ExponentType& t);

}  // namespace aligncorr
