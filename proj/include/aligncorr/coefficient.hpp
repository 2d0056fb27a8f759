#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "aligncorr/scalar.hpp"

namespace aligncorr {

/// Polynomial in parameters over Q or F_p.
///
/// With no parameters this is a plain field element; with one parameter t it
/// is the ring K[t] used for generic substitutions; fiber parametrizations use
/// one parameter per fiber coordinate a_{i,v}. Exponent vectors are stored
/// with trailing zeros trimmed so that equality is structural.
class Coefficient {
 public:
  using Exponents = std::vector<std::uint32_t>;
  using TermMap = std::map<Exponents, Scalar>;

  Coefficient() = default;
  Coefficient(Scalar constant);  // NOLINT(google-explicit-constructor)
  Coefficient(long value, std::uint32_t characteristic = 0);  // NOLINT

  static Coefficient zero(std::uint32_t characteristic = 0);
  static Coefficient one(std::uint32_t characteristic = 0);
  /// The parameter with the given index, scaled by `scale`.
  static Coefficient parameter(std::size_t index, std::uint32_t characteristic = 0);
  static Coefficient term(const Scalar& scale, Exponents exponents);

  std::uint32_t characteristic() const { return characteristic_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::optional<Scalar> as_constant() const;
  /// One more than the largest parameter index that occurs.
  std::size_t parameter_count() const;
  std::uint32_t total_degree() const;

  Coefficient operator-() const;
  Coefficient& operator+=(const Coefficient& other);
  Coefficient& operator-=(const Coefficient& other);
  Coefficient& operator*=(const Coefficient& other);
  friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
  friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
  friend Coefficient operator*(const Coefficient& a, const Coefficient& b);
  friend bool operator==(const Coefficient& a, const Coefficient& b);
  friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

  Coefficient pow(std::uint64_t exponent) const;
  Scalar evaluate(std::span<const Scalar> point) const;

  /// Human-readable form; parameter k is printed as names[k] (or "t" / "a<k>").
  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  void add_term(Exponents exponents, const Scalar& value);

  TermMap terms_;
  std::uint32_t characteristic_ = 0;
};

}  // namespace aligncorr
