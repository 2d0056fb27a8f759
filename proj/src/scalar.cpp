#include "aligncorr/scalar.hpp"

#include <stdexcept>

namespace aligncorr {

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t d = 2; d * d <= value; ++d) {
    if (value % d == 0) return false;
  }
  return true;
}

std::uint32_t common_characteristic(std::uint32_t a, std::uint32_t b) {
  if (a == b || b == 0) return a;
  if (a == 0) return b;
  throw std::invalid_argument("scalars from different prime fields: F_" + std::to_string(a) +
                              " and F_" + std::to_string(b));
}

Scalar::Scalar(long value, std::uint32_t characteristic)
    : value_(value), characteristic_(characteristic) {
  normalize();
}

Scalar::Scalar(mpq_class value, std::uint32_t characteristic)
    : value_(std::move(value)), characteristic_(characteristic) {
  value_.canonicalize();
  normalize();
}

void Scalar::normalize() {
  if (characteristic_ == 0) return;
  const mpz_class p(characteristic_);
  mpz_class num;
  mpz_class den;
  mpz_mod(num.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
  mpz_mod(den.get_mpz_t(), value_.get_den_mpz_t(), p.get_mpz_t());
  if (den == 0) {
    throw std::domain_error("denominator vanishes in F_" + std::to_string(characteristic_));
  }
  if (den != 1) {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    num = num * inv;
    mpz_mod(num.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
  }
  value_ = mpq_class(num);
}

Scalar Scalar::in_field(std::uint32_t characteristic) const {
  if (characteristic == characteristic_) return *this;
  if (characteristic_ != 0) {
    throw std::invalid_argument("cannot move an F_" + std::to_string(characteristic_) +
                                " value into characteristic " + std::to_string(characteristic));
  }
  return Scalar(value_, characteristic);
}

Scalar Scalar::operator-() const { return Scalar(mpq_class(-value_), characteristic_); }

Scalar& Scalar::operator+=(const Scalar& other) {
  const auto p = common_characteristic(characteristic_, other.characteristic_);
  if (p != characteristic_) *this = in_field(p);
  const Scalar rhs = other.in_field(p);
  value_ += rhs.value_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  const auto p = common_characteristic(characteristic_, other.characteristic_);
  if (p != characteristic_) *this = in_field(p);
  const Scalar rhs = other.in_field(p);
  value_ *= rhs.value_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  const auto p = common_characteristic(characteristic_, other.characteristic_);
  return *this *= other.in_field(p).inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.characteristic_ == b.characteristic_) return a.value_ == b.value_;
  const auto p = common_characteristic(a.characteristic_, b.characteristic_);
  return a.in_field(p).value_ == b.in_field(p).value_;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (characteristic_ == 0) return Scalar(mpq_class(1) / value_, 0);
  mpz_class inv;
  const mpz_class p(characteristic_);
  mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(mpq_class(inv), characteristic_);
}

Scalar Scalar::pow(std::uint64_t exponent) const {
  Scalar result = Scalar::one(characteristic_);
  Scalar base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string Scalar::to_string() const { return value_.get_str(); }

}  // namespace aligncorr
