#include "aligncorr/measuring.hpp"

#include <future>
#include <random>

#include "aligncorr/errors.hpp"
#include "aligncorr/ideal_space.hpp"
#include "aligncorr/text.hpp"

namespace aligncorr {

std::size_t validate_sequence(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty()) throw InputError("empty ideal sequence");
  const std::size_t n = ideals.front().vars();
  if (n == 0) throw InputError("ambient dimension must be at least 1");
  for (const auto& I : ideals) {
    if (I.vars() != n) throw DimensionMismatch("ideals live in different ambient dimensions");
    if (I.is_unit()) throw InputError("the unit ideal is not allowed in a sequence");
    if (!has_finite_colength(I)) {
      throw InfiniteColength("ideal " + format_ideal(I) + " has infinite colength");
    }
  }
  return n;
}

void validate_characteristic(std::uint32_t characteristic) {
  if (characteristic != 0 && !is_prime(characteristic)) {
    throw InputError("characteristic must be 0 or a prime, got " + std::to_string(characteristic));
  }
}

std::uint32_t max_nilpotency(const std::vector<MonomialIdeal>& ideals) {
  std::uint32_t N = 1;
  for (const auto& I : ideals) N = std::max(N, nilpotency_index(I));
  return N;
}

bool satisfies_elementary_test(std::size_t i, const Monomial& f,
                               const std::vector<MonomialIdeal>& ideals,
                               std::uint32_t characteristic) {
  const auto s = elementary(f.vars(), i, f, true, characteristic);
  for (const auto& I : ideals) {
    if (!preserves_ideal(s, I)) return false;
  }
  return true;
}

namespace {

MonomialIdeal assemble(std::size_t n, std::size_t i, std::uint32_t N0,
                       std::vector<Monomial> passing) {
  passing.push_back(Monomial::variable(n, i));
  const auto tail = MonomialIdeal::maximal_power(n, N0);
  for (const auto& g : tail.generators()) passing.push_back(g);
  return MonomialIdeal(n, std::move(passing));
}

std::vector<Monomial> candidates(std::size_t n, std::size_t i, std::uint32_t N0) {
  std::vector<Monomial> out;
  const Monomial xi = Monomial::variable(n, i);
  for (const auto& m : monomials_below(n, N0)) {
    if (m.degree() >= 1 && m != xi) out.push_back(m);
  }
  return out;
}

}  // namespace

MeasuringSequence measuring_sequence(const std::vector<MonomialIdeal>& ideals,
                                     std::uint32_t characteristic) {
  const std::size_t n = validate_sequence(ideals);
  validate_characteristic(characteristic);
  const std::uint32_t N0 = max_nilpotency(ideals);

  std::vector<std::future<MonomialIdeal>> jobs;
  for (std::size_t i = 0; i < n; ++i) {
    jobs.push_back(std::async(std::launch::async, [&, i] {
      std::vector<Monomial> passing;
      for (const auto& f : candidates(n, i, N0)) {
        if (satisfies_elementary_test(i, f, ideals, characteristic)) passing.push_back(f);
      }
      return assemble(n, i, N0, std::move(passing));
    }));
  }
  MeasuringSequence out;
  for (auto& job : jobs) out.ideals.push_back(job.get());
  out.characteristic = characteristic;
  out.source = ideals;
  out.cutoff = N0;
  return out;
}

MeasuringSequence measuring_char0_colon(const std::vector<MonomialIdeal>& ideals) {
  const std::size_t n = validate_sequence(ideals);
  const std::uint32_t N0 = max_nilpotency(ideals);
  MeasuringSequence out;
  for (std::size_t i = 0; i < n; ++i) {
    const Monomial xi = Monomial::variable(n, i);
    std::vector<Monomial> passing;
    for (const auto& f : candidates(n, i, N0)) {
      bool ok = true;
      for (const auto& I : ideals) {
        if (!colon(I, f).contains(colon(I, xi))) {
          ok = false;
          break;
        }
      }
      if (ok) passing.push_back(f);
    }
    out.ideals.push_back(assemble(n, i, N0, std::move(passing)));
  }
  out.characteristic = 0;
  out.source = ideals;
  out.cutoff = N0;
  return out;
}

bool passing_set_is_ideal(const MeasuringSequence& a) {
  const std::size_t n = a.vars();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& f : candidates(n, i, a.cutoff)) {
      if (a[i].contains(f) && !satisfies_elementary_test(i, f, a.source, a.characteristic)) {
        return false;
      }
    }
  }
  return true;
}

MonomialIdeal product_ideal(const MeasuringSequence& a, const Monomial& alpha) {
  const std::size_t n = a.vars();
  if (alpha.vars() != n) throw DimensionMismatch("exponent vector has the wrong length");
  const auto layers = a.characteristic == 0 ? std::vector<Monomial>{alpha}
                                            : exponent_layers(alpha, a.characteristic);
  MonomialIdeal result = MonomialIdeal::unit(n);
  for (std::size_t k = 0; k < layers.size(); ++k) {
    MonomialIdeal layer = MonomialIdeal::unit(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (layers[k][i] > 0) layer = product(layer, power(a[i], layers[k][i]));
    }
    if (k > 0) layer = frobenius_power(layer, a.characteristic, static_cast<std::uint32_t>(k));
    result = product(result, layer);
  }
  return result;
}

std::vector<ContainmentCheck> verify_product_containment(const MeasuringSequence& a) {
  std::vector<ContainmentCheck> checks;
  for (std::size_t j = 0; j < a.source.size(); ++j) {
    for (const auto& alpha : a.source[j].generators()) {
      checks.push_back({j, alpha, a.source[j].contains(product_ideal(a, alpha))});
    }
  }
  return checks;
}

bool verify_induced_map(const Substitution& g, const MonomialIdeal& ideal,
                        const MeasuringSequence& a, std::uint32_t cutoff) {
  const std::size_t n = a.vars();
  if (ideal.vars() != n || g.vars() != n) throw DimensionMismatch("induced map: dimensions differ");
  if (!ideal.contains(MonomialIdeal::maximal_power(n, cutoff))) {
    throw CutoffTooSmall("m^" + std::to_string(cutoff) + " is not inside the ideal");
  }
  const MonomialBasis basis(n, cutoff);
  const std::uint32_t p = common_characteristic(substitution_characteristic(g), a.characteristic);
  if (p != a.characteristic) throw InputError("substitution and measuring sequence disagree on characteristic");

  std::vector<Subspace> images;
  for (std::size_t i = 0; i < n; ++i) images.push_back(ideal_image_mod(g, a[i], basis));
  const Subspace whole = monomial_ideal_space(MonomialIdeal::unit(n), basis, p);

  Subspace total(basis.size(), p);
  for (const auto& alpha : ideal.generators()) {
    const auto layers = p == 0 ? std::vector<Monomial>{alpha} : exponent_layers(alpha, p);
    Subspace term = whole;
    for (std::size_t k = 0; k < layers.size(); ++k) {
      Subspace layer = whole;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::uint32_t e = 0; e < layers[k][i]; ++e) layer = ideal_product(layer, images[i], basis);
      }
      for (std::size_t f = 0; f < k; ++f) layer = ideal_frobenius(layer, basis);
      term = ideal_product(term, layer, basis);
    }
    total = ideal_sum(total, term);
  }
  return total == ideal_image_mod(g, ideal, basis);
}

namespace {

long small_coefficient(std::mt19937_64& rng, long radius) {
  return static_cast<long>(rng() % static_cast<std::uint64_t>(2 * radius + 1)) - radius;
}

std::vector<Monomial> members_below(const MonomialIdeal& A, std::uint32_t N0, bool inside) {
  std::vector<Monomial> out;
  for (const auto& m : monomials_below(A.vars(), N0)) {
    if (m.degree() >= 1 && A.contains(m) == inside) out.push_back(m);
  }
  return out;
}

}  // namespace

Substitution random_automorphism(std::size_t vars, std::uint32_t cutoff,
                                 std::uint32_t characteristic, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  cutoff = std::max<std::uint32_t>(cutoff, 2);
  for (;;) {
    std::vector<TruncatedPolynomial> images;
    for (std::size_t i = 0; i < vars; ++i) {
      TruncatedPolynomial f(vars, cutoff);
      for (const auto& m : monomials_below(vars, cutoff)) {
        if (m.degree() == 0) continue;
        const long c = small_coefficient(rng, 3);
        if (m.degree() > 1 && rng() % 2 == 0) continue;
        f.add_term(m, Coefficient(c, characteristic));
      }
      images.push_back(std::move(f));
    }
    try {
      return Substitution(std::move(images), cutoff);
    } catch (const SingularLinearPart&) {
      // Draw again.
    }
  }
}

TrialReport verify_membership_criterion(const MeasuringSequence& a, std::size_t trials, std::uint64_t seed) {
  const std::size_t n = a.vars();
  const std::uint32_t p = a.characteristic;
  const Coefficient t = Coefficient::parameter(0, p);
  std::mt19937_64 rng(seed);
  TrialReport report;

  std::vector<std::vector<Monomial>> inside(n), outside(n);
  for (std::size_t i = 0; i < n; ++i) {
    inside[i] = members_below(a[i], a.cutoff, true);
    outside[i] = members_below(a[i], a.cutoff, false);
  }

  for (std::size_t trial = 0; trial < trials; ++trial) {
    std::vector<TruncatedPolynomial> images;
    for (std::size_t i = 0; i < n; ++i) {
      TruncatedPolynomial f = TruncatedPolynomial::variable(n, i, std::nullopt, p);
      for (const auto& m : inside[i]) {
        const long c = small_coefficient(rng, 2);
        if (c != 0) f.add_term(m, t * Coefficient(c, p));
      }
      images.push_back(std::move(f));
    }
    // det(1 + t M) has constant term 1, so this is always an automorphism.
    const Substitution g(std::move(images));
    ++report.trials;
    for (std::size_t j = 0; j < n; ++j) {
      if (!preserves_ideal(g, a[j])) {
        ++report.failures;
        report.details.push_back("trial " + std::to_string(trial) +
                                 ": substitution into A fails to preserve A_" +
                                 std::to_string(j + 1));
        break;
      }
    }

    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < n; ++i) {
      if (!outside[i].empty()) movable.push_back(i);
    }
    if (movable.empty()) continue;
    const std::size_t i = movable[rng() % movable.size()];
    const Monomial& f = outside[i][rng() % outside[i].size()];
    const Substitution bad = compose(elementary(n, i, f, true, p), g);
    ++report.trials;
    bool broken = false;
    for (std::size_t j = 0; j < n && !broken; ++j) broken = !preserves_ideal(bad, a[j]);
    if (!broken) {
      ++report.failures;
      report.details.push_back("trial " + std::to_string(trial) + ": x" + std::to_string(i + 1) +
                               " -> x" + std::to_string(i + 1) + " + t*" + format_monomial(f) +
                               " still preserves every A_j");
    }
  }
  return report;
}

}  // namespace aligncorr
