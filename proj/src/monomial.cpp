#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "aligncorr/errors.hpp"
#include "aligncorr/scalar.hpp"
#include "aligncorr/monomial.hpp"
#include "aligncorr/monomial_ideal.hpp"

namespace aligncorr {

namespace {

void require_same_vars(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("ambient variable counts differ: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exponent) {
  std::uint64_t result = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (result > UINT32_MAX / std::max<std::uint64_t>(base, 1)) {
      throw InputError("exponent overflow");
    }
    result *= base;
  }
  return result;
}

// Low degree first, then lexicographically larger first: x1 before x2.
bool ideal_order(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  return a > b;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), ideal_order);
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  for (const auto& g : gens) {
    const bool redundant =
        std::any_of(kept.begin(), kept.end(), [&](const Monomial& h) { return divides(h, g); });
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

}  // namespace

Monomial Monomial::variable(std::size_t vars, std::size_t index, std::uint32_t power) {
  if (index >= vars) throw std::out_of_range("variable index out of range");
  std::vector<std::uint32_t> e(vars, 0);
  e[index] = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint64_t{0});
}

std::uint64_t Monomial::weighted_degree(const WeightVector& weights) const {
  require_same_vars(vars(), weights.vars());
  std::uint64_t d = 0;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    d += std::uint64_t{exponents_[i]} * weights[i];
  }
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  require_same_vars(vars(), other.vars());
  std::vector<std::uint32_t> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::pow(std::uint64_t k) const {
  std::vector<std::uint32_t> e(exponents_);
  for (auto& x : e) {
    const std::uint64_t v = std::uint64_t{x} * k;
    if (v > UINT32_MAX) throw InputError("exponent overflow");
    x = static_cast<std::uint32_t>(v);
  }
  return Monomial(std::move(e));
}

bool divides(const Monomial& f, const Monomial& g) {
  require_same_vars(f.vars(), g.vars());
  for (std::size_t i = 0; i < f.vars(); ++i) {
    if (f[i] > g[i]) return false;
  }
  return true;
}

Monomial lcm(const Monomial& f, const Monomial& g) {
  require_same_vars(f.vars(), g.vars());
  std::vector<std::uint32_t> e(f.vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(f[i], g[i]);
  return Monomial(std::move(e));
}

Monomial colon(const Monomial& f, const Monomial& g) {
  require_same_vars(f.vars(), g.vars());
  std::vector<std::uint32_t> e(f.vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = f[i] > g[i] ? f[i] - g[i] : 0;
  return Monomial(std::move(e));
}

bool graded_lex_before(const Monomial& a, const Monomial& b) {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da > db;
  return a > b;
}

std::vector<Monomial> monomials_of_degree(std::size_t vars, std::uint32_t degree) {
  std::vector<Monomial> out;
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> e(vars, 0);
  // Recursive fill: first variable takes the largest share first.
  auto fill = [&](auto&& self, std::size_t i, std::uint32_t remaining) -> void {
    if (i + 1 == vars) {
      e[i] = remaining;
      out.emplace_back(e);
      return;
    }
    for (std::uint32_t k = remaining + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, remaining - k);
    }
  };
  fill(fill, 0, degree);
  return out;
}

std::vector<Monomial> monomials_below(std::size_t vars, std::uint32_t cutoff) {
  std::vector<Monomial> out;
  for (std::uint32_t d = 0; d < cutoff; ++d) {
    auto layer = monomials_of_degree(vars, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

WeightVector::WeightVector(std::vector<std::uint32_t> weights) : weights_(std::move(weights)) {
  for (auto w : weights_) {
    if (w == 0) throw InputError("weights must be positive");
  }
}

ExponentType exponent_type(const Monomial& f, std::uint32_t characteristic,
                           const WeightVector& weights) {
  ExponentType type;
  type.characteristic = characteristic;
  if (characteristic == 0) {
    type.parts.push_back(f.weighted_degree(weights));
    return type;
  }
  for (const auto& layer : exponent_layers(f, characteristic)) {
    type.parts.push_back(layer.weighted_degree(weights));
  }
  while (type.parts.size() > 1 && type.parts.back() == 0) type.parts.pop_back();
  if (type.parts.empty()) type.parts.push_back(0);
  return type;
}

ExponentType exponent_type(const Monomial& f, std::uint32_t characteristic) {
  return exponent_type(f, characteristic, WeightVector::uniform(f.vars()));
}

std::vector<Monomial> exponent_layers(const Monomial& f, std::uint32_t characteristic) {
  if (characteristic == 0) return {f};
  std::vector<Monomial> layers;
  std::vector<std::uint32_t> rest = f.exponents();
  while (std::any_of(rest.begin(), rest.end(), [](auto x) { return x != 0; })) {
    std::vector<std::uint32_t> digit(rest.size());
    for (std::size_t i = 0; i < rest.size(); ++i) {
      digit[i] = rest[i] % characteristic;
      rest[i] /= characteristic;
    }
    layers.emplace_back(std::move(digit));
  }
  if (layers.empty()) layers.push_back(Monomial::unit(f.vars()));
  return layers;
}

bool exponent_type_leq(const ExponentType& s, const ExponentType& t) {
  if (s.characteristic != t.characteristic) {
    throw InputError("exponent types from different characteristics");
  }
  const std::uint32_t p = s.characteristic;
  if (p == 0) return s.parts == t.parts;
  const std::size_t len = std::max(s.parts.size(), t.parts.size());
  // Partial sums stay tiny for monomials of realistic degree; use 128-bit anyway.
  unsigned __int128 sum_s = 0;
  unsigned __int128 sum_t = 0;
  unsigned __int128 scale = 1;
  for (std::size_t k = 0; k < len; ++k) {
    if (k < s.parts.size()) sum_s += scale * s.parts[k];
    if (k < t.parts.size()) sum_t += scale * t.parts[k];
    if (sum_s > sum_t) return false;
    scale *= p;
  }
  return sum_s == sum_t;
}

MonomialIdeal::MonomialIdeal(std::size_t vars, std::vector<Monomial> generators) : vars_(vars) {
  for (const auto& g : generators) require_same_vars(vars, g.vars());
  generators_ = minimalize(std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t vars) {
  return MonomialIdeal(vars, {Monomial::unit(vars)});
}

MonomialIdeal MonomialIdeal::maximal(std::size_t vars) { return maximal_power(vars, 1); }

MonomialIdeal MonomialIdeal::maximal_power(std::size_t vars, std::uint32_t degree) {
  return MonomialIdeal(vars, monomials_of_degree(vars, degree));
}

bool MonomialIdeal::is_unit() const {
  return generators_.size() == 1 && generators_.front().is_unit();
}

bool MonomialIdeal::contains(const Monomial& f) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return divides(g, f); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_vars(vars_, other.vars_);
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
  require_same_vars(ideal.vars(), f.vars());
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(colon(g, f));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a.vars(), b.vars());
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a.vars(), b.vars());
  std::vector<Monomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_vars(a.vars(), b.vars());
  std::vector<Monomial> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(lcm(f, g));
  }
  return MonomialIdeal(a.vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& a, std::uint32_t k) {
  MonomialIdeal result = MonomialIdeal::unit(a.vars());
  for (std::uint32_t i = 0; i < k; ++i) result = product(result, a);
  return result;
}

MonomialIdeal frobenius_power(const MonomialIdeal& ideal, std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw InputError("Frobenius requires a prime characteristic");
  const std::uint64_t q = checked_pow(p, k);
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.pow(q));
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

std::vector<std::uint32_t> pure_power_degrees(const MonomialIdeal& ideal) {
  std::vector<std::uint32_t> degrees(ideal.vars(), 0);
  for (std::size_t i = 0; i < ideal.vars(); ++i) {
    bool found = false;
    for (const auto& g : ideal.generators()) {
      const bool pure = g.degree() == g[i];
      if (pure && (!found || g[i] < degrees[i])) {
        degrees[i] = g[i];
        found = true;
      }
    }
    if (!found) {
      throw InfiniteColength("no pure power of x" + std::to_string(i + 1) + " in the ideal");
    }
  }
  return degrees;
}

bool has_finite_colength(const MonomialIdeal& ideal) {
  try {
    pure_power_degrees(ideal);
    return true;
  } catch (const InfiniteColength&) {
    return false;
  }
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal) {
  const auto box = pure_power_degrees(ideal);
  std::vector<Monomial> out;
  const std::size_t n = ideal.vars();
  if (std::any_of(box.begin(), box.end(), [](auto d) { return d == 0; })) return out;
  std::vector<std::uint32_t> e(n, 0);
  while (true) {
    Monomial m(e);
    if (!ideal.contains(m)) out.push_back(std::move(m));
    std::size_t i = 0;
    while (i < n && ++e[i] == box[i]) e[i++] = 0;
    if (i == n) break;
  }
  std::sort(out.begin(), out.end(), ideal_order);
  return out;
}

std::size_t colength(const MonomialIdeal& ideal) { return standard_monomials(ideal).size(); }

std::uint32_t nilpotency_index(const MonomialIdeal& ideal) {
  const auto box = pure_power_degrees(ideal);
  std::uint32_t bound = 1;
  for (auto d : box) bound += d > 0 ? d - 1 : 0;
  for (std::uint32_t d = 0; d <= bound; ++d) {
    const auto layer = monomials_of_degree(ideal.vars(), d);
    if (std::all_of(layer.begin(), layer.end(), [&](const Monomial& m) { return ideal.contains(m); })) {
      return d;
    }
  }
  // Unreachable: every monomial of degree `bound` is divisible by a pure power.
  throw InconsistencyError("nilpotency scan exceeded its bound");
}

}  // namespace aligncorr
