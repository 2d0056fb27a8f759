#include "aligncorr/coefficient.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace aligncorr {

namespace {

void trim(Coefficient::Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Coefficient::Exponents add_exponents(const Coefficient::Exponents& a,
                                     const Coefficient::Exponents& b) {
  Coefficient::Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace

Coefficient::Coefficient(Scalar constant) : characteristic_(constant.characteristic()) {
  if (!constant.is_zero()) terms_.emplace(Exponents{}, std::move(constant));
}

Coefficient::Coefficient(long value, std::uint32_t characteristic)
    : Coefficient(Scalar(value, characteristic)) {}

Coefficient Coefficient::zero(std::uint32_t characteristic) {
  return Coefficient(Scalar::zero(characteristic));
}

Coefficient Coefficient::one(std::uint32_t characteristic) {
  return Coefficient(Scalar::one(characteristic));
}

Coefficient Coefficient::parameter(std::size_t index, std::uint32_t characteristic) {
  Exponents e(index + 1, 0);
  e[index] = 1;
  return term(Scalar::one(characteristic), std::move(e));
}

Coefficient Coefficient::term(const Scalar& scale, Exponents exponents) {
  Coefficient c = zero(scale.characteristic());
  c.add_term(std::move(exponents), scale);
  return c;
}

void Coefficient::add_term(Exponents exponents, const Scalar& value) {
  if (value.is_zero()) return;
  trim(exponents);
  characteristic_ = common_characteristic(characteristic_, value.characteristic());
  auto it = terms_.find(exponents);
  if (it == terms_.end()) {
    terms_.emplace(std::move(exponents), value.in_field(characteristic_));
    return;
  }
  it->second += value;
  if (it->second.is_zero()) terms_.erase(it);
}

bool Coefficient::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

std::optional<Scalar> Coefficient::as_constant() const {
  if (terms_.empty()) return Scalar::zero(characteristic_);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

std::size_t Coefficient::parameter_count() const {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return n;
}

std::uint32_t Coefficient::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0U));
  }
  return d;
}

Coefficient Coefficient::operator-() const {
  Coefficient out = zero(characteristic_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Coefficient& Coefficient::operator+=(const Coefficient& other) {
  characteristic_ = common_characteristic(characteristic_, other.characteristic_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  if (characteristic_ != 0) {
    // Constants created in characteristic 0 are mapped into F_p lazily.
    TermMap fixed;
    for (auto& [e, c] : terms_) {
      Scalar v = c.in_field(characteristic_);
      if (!v.is_zero()) fixed.emplace(e, v);
    }
    terms_ = std::move(fixed);
  }
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& other) { return *this += -other; }

Coefficient operator*(const Coefficient& a, const Coefficient& b) {
  Coefficient out = Coefficient::zero(common_characteristic(a.characteristic_, b.characteristic_));
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  }
  return out;
}

Coefficient& Coefficient::operator*=(const Coefficient& other) { return *this = *this * other; }

bool operator==(const Coefficient& a, const Coefficient& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || ia->second != ib->second) return false;
  }
  return true;
}

Coefficient Coefficient::pow(std::uint64_t exponent) const {
  Coefficient result = one(characteristic_);
  Coefficient base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Scalar Coefficient::evaluate(std::span<const Scalar> point) const {
  Scalar total = Scalar::zero(characteristic_);
  for (const auto& [e, c] : terms_) {
    Scalar term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (i >= point.size()) throw std::invalid_argument("evaluation point is too short");
      term *= point[i].pow(e[i]);
    }
    total += term;
  }
  return total;
}

std::string Coefficient::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  // Highest total degree first.
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](auto* x, auto* y) {
    const auto dx = std::accumulate(x->first.begin(), x->first.end(), 0U);
    const auto dy = std::accumulate(y->first.begin(), y->first.end(), 0U);
    if (dx != dy) return dx > dy;
    return x->first > y->first;
  });
  const bool univariate = parameter_count() <= 1 && names.empty();
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    std::string coeff = c.to_string();
    const bool negative = c.characteristic() == 0 && sgn(c.value()) < 0;
    if (negative) coeff = (-c).to_string();
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      if (i < names.size()) mono << names[i];
      else if (univariate) mono << "t";
      else mono << "a" << i;
      if (e[i] > 1) mono << "^" << e[i];
    }
    if (!any) {
      out << coeff;
    } else if (coeff == "1") {
      out << mono.str();
    } else {
      out << coeff << "*" << mono.str();
    }
  }
  return out.str();
}

}  // namespace aligncorr
