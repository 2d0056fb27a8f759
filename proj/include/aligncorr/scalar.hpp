#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace aligncorr {

bool is_prime(std::uint64_t value);

/// An element of Q (characteristic 0) or of the prime field F_p.
///
/// F_p elements are kept as their canonical representative in [0, p).
/// Mixing a characteristic-0 value with an F_p value maps the rational into
/// F_p first (the canonical map Z_(p) -> F_p); mixing two different primes
/// throws std::invalid_argument.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value, std::uint32_t characteristic = 0);  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class value, std::uint32_t characteristic = 0);

  static Scalar zero(std::uint32_t characteristic) { return Scalar(0L, characteristic); }
  static Scalar one(std::uint32_t characteristic) { return Scalar(1L, characteristic); }

  std::uint32_t characteristic() const { return characteristic_; }
  const mpq_class& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// Image of this value in the field of the given characteristic.
  Scalar in_field(std::uint32_t characteristic) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  Scalar inverse() const;
  Scalar pow(std::uint64_t exponent) const;

  /// "num/den" for rationals (or "num" when integral), the residue for F_p.
  std::string to_string() const;

 private:
  void normalize();

  mpq_class value_{0};
  std::uint32_t characteristic_ = 0;
};

/// Characteristic shared by two operands under the promotion rule above.
std::uint32_t common_characteristic(std::uint32_t a, std::uint32_t b);

}  // namespace aligncorr
