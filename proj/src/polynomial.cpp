#include "aligncorr/polynomial.hpp"

#include <sstream>
#include <vector>

#include "aligncorr/errors.hpp"
#include "aligncorr/text.hpp"

namespace aligncorr {

std::optional<std::uint32_t> min_cutoff(std::optional<std::uint32_t> a,
                                        std::optional<std::uint32_t> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

TruncatedPolynomial::TruncatedPolynomial(std::size_t vars, std::optional<std::uint32_t> cutoff)
    : vars_(vars), cutoff_(cutoff) {}

TruncatedPolynomial TruncatedPolynomial::constant(std::size_t vars, const Coefficient& c,
                                                  std::optional<std::uint32_t> cutoff) {
  return term(Monomial::unit(vars), c, cutoff);
}

TruncatedPolynomial TruncatedPolynomial::variable(std::size_t vars, std::size_t index,
                                                  std::optional<std::uint32_t> cutoff,
                                                  std::uint32_t characteristic) {
  return term(Monomial::variable(vars, index), Coefficient::one(characteristic), cutoff);
}

TruncatedPolynomial TruncatedPolynomial::term(const Monomial& m, const Coefficient& c,
                                              std::optional<std::uint32_t> cutoff) {
  TruncatedPolynomial f(m.vars(), cutoff);
  f.add_term(m, c);
  return f;
}

Coefficient TruncatedPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Coefficient() : it->second;
}

std::uint64_t TruncatedPolynomial::order() const {
  std::uint64_t best = 0;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (first || m.degree() < best) best = m.degree();
    first = false;
  }
  return best;
}

void TruncatedPolynomial::add_term(const Monomial& m, const Coefficient& c) {
  if (m.vars() != vars_) throw DimensionMismatch("monomial has the wrong number of variables");
  if (c.is_zero()) return;
  if (cutoff_ && m.degree() >= *cutoff_) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TruncatedPolynomial TruncatedPolynomial::truncated(std::optional<std::uint32_t> cutoff) const {
  TruncatedPolynomial out(vars_, min_cutoff(cutoff_, cutoff));
  for (const auto& [m, c] : terms_) out.add_term(m, c);
  return out;
}

TruncatedPolynomial TruncatedPolynomial::operator-() const {
  TruncatedPolynomial out(vars_, cutoff_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

TruncatedPolynomial& TruncatedPolynomial::operator+=(const TruncatedPolynomial& other) {
  if (other.vars_ != vars_) throw DimensionMismatch("polynomials in different rings");
  cutoff_ = min_cutoff(cutoff_, other.cutoff_);
  if (cutoff_) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      it = it->first.degree() >= *cutoff_ ? terms_.erase(it) : std::next(it);
    }
  }
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

TruncatedPolynomial& TruncatedPolynomial::operator-=(const TruncatedPolynomial& other) {
  return *this += -other;
}

TruncatedPolynomial operator*(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  if (a.vars_ != b.vars_) throw DimensionMismatch("polynomials in different rings");
  TruncatedPolynomial out(a.vars_, min_cutoff(a.cutoff_, b.cutoff_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (out.cutoff_ && ma.degree() + mb.degree() >= *out.cutoff_) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

TruncatedPolynomial TruncatedPolynomial::scaled(const Coefficient& c) const {
  TruncatedPolynomial out(vars_, cutoff_);
  for (const auto& [m, x] : terms_) out.add_term(m, x * c);
  return out;
}

TruncatedPolynomial TruncatedPolynomial::pow(std::uint64_t k) const {
  TruncatedPolynomial result = constant(vars_, Coefficient::one(), cutoff_);
  TruncatedPolynomial base = *this;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

bool operator==(const TruncatedPolynomial& a, const TruncatedPolynomial& b) {
  return a.vars_ == b.vars_ && a.terms_ == b.terms_;
}

std::string TruncatedPolynomial::to_string(std::span<const std::string> parameter_names) const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  // Low degree first, x1 before x2.
  std::sort(order.begin(), order.end(), [](auto* x, auto* y) {
    if (x->first.degree() != y->first.degree()) return x->first.degree() < y->first.degree();
    return x->first > y->first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [m, c] = *t;
    std::string coeff = c.to_string(parameter_names);
    bool negative = false;
    if (c.is_monomial() && c.terms().begin()->second.characteristic() == 0 &&
        sgn(c.terms().begin()->second.value()) < 0) {
      negative = true;
      coeff = (-c).to_string(parameter_names);
    }
    const bool compound = !c.is_monomial();
    if (!first) out << (negative ? " - " : " + ");
    else if (negative) out << "-";
    first = false;
    if (compound) coeff = "(" + coeff + ")";
    if (m.is_unit()) {
      out << coeff;
    } else if (coeff == "1") {
      out << format_monomial(m);
    } else {
      out << coeff << "*" << format_monomial(m);
    }
  }
  return out.str();
}

Coefficient evaluate(const TruncatedPolynomial& f, std::span<const Coefficient> values) {
  if (values.size() != f.vars()) throw DimensionMismatch("wrong number of evaluation values");
  std::vector<std::vector<Coefficient>> powers(values.size());
  auto power = [&](std::size_t i, std::uint32_t e) -> const Coefficient& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Coefficient::one());
    while (cache.size() <= e) cache.push_back(cache.back() * values[i]);
    return cache[e];
  };
  Coefficient total;
  for (const auto& [m, c] : f.terms()) {
    Coefficient term = c;
    for (std::size_t i = 0; i < m.vars(); ++i) {
      if (m[i] > 0) term *= power(i, m[i]);
    }
    total += term;
  }
  return total;
}

}  // namespace aligncorr
