#include "aligncorr/substitution.hpp"

#include <map>

#include "aligncorr/errors.hpp"

namespace aligncorr {

namespace {

std::uint32_t characteristic_of(const std::vector<TruncatedPolynomial>& images) {
  std::uint32_t p = 0;
  for (const auto& f : images) {
    for (const auto& [m, c] : f.terms()) p = common_characteristic(p, c.characteristic());
  }
  return p;
}

/// Caches powers of the images so repeated substitution stays cheap.
class PowerTable {
 public:
  explicit PowerTable(const Substitution& s, std::optional<std::uint32_t> cutoff)
      : s_(s), cutoff_(cutoff) {}

  const TruncatedPolynomial& power(std::size_t i, std::uint32_t e) {
    auto key = std::make_pair(i, e);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    TruncatedPolynomial value(s_.vars(), cutoff_);
    if (e == 0) {
      value = TruncatedPolynomial::constant(s_.vars(), Coefficient::one(), cutoff_);
    } else if (e == 1) {
      value = s_.image(i).truncated(cutoff_);
    } else {
      value = power(i, e / 2) * power(i, e - e / 2);
    }
    return cache_.emplace(key, std::move(value)).first->second;
  }

 private:
  const Substitution& s_;
  std::optional<std::uint32_t> cutoff_;
  std::map<std::pair<std::size_t, std::uint32_t>, TruncatedPolynomial> cache_;
};

TruncatedPolynomial substitute_with(const TruncatedPolynomial& f, PowerTable& table,
                                    std::size_t vars, std::optional<std::uint32_t> cutoff) {
  TruncatedPolynomial result(vars, cutoff);
  for (const auto& [m, c] : f.terms()) {
    // Every image has order >= 1, so a monomial of degree >= cutoff vanishes.
    if (cutoff && m.degree() >= *cutoff) continue;
    TruncatedPolynomial term = TruncatedPolynomial::constant(vars, c, cutoff);
    for (std::size_t i = 0; i < vars && !term.is_zero(); ++i) {
      if (m[i] > 0) term = term * table.power(i, m[i]);
    }
    result += term;
  }
  return result;
}

}  // namespace

Substitution::Substitution(std::vector<TruncatedPolynomial> images,
                           std::optional<std::uint32_t> cutoff)
    : images_(std::move(images)), cutoff_(cutoff) {
  // Modulo m every automorphism is trivial; keep the linear part regardless.
  if (cutoff_ && *cutoff_ < 2) cutoff_ = 2;
  if (images_.empty()) throw DimensionMismatch("substitution needs at least one variable");
  const Monomial one = Monomial::unit(images_.size());
  for (auto& f : images_) {
    if (f.vars() != images_.size()) {
      throw DimensionMismatch("substitution image has the wrong number of variables");
    }
    if (!f.coefficient(one).is_zero()) {
      throw InputError("substitution image has a nonzero constant term");
    }
    f = f.truncated(min_cutoff(cutoff_, f.cutoff()));
  }
  if (determinant(linear_part()).is_zero()) {
    throw SingularLinearPart("linear part of the substitution is singular");
  }
}

Substitution Substitution::identity(std::size_t vars, std::optional<std::uint32_t> cutoff,
                                    std::uint32_t characteristic) {
  std::vector<TruncatedPolynomial> images;
  for (std::size_t i = 0; i < vars; ++i) {
    images.push_back(TruncatedPolynomial::variable(vars, i, cutoff, characteristic));
  }
  return Substitution(std::move(images), cutoff);
}

std::vector<std::vector<Coefficient>> Substitution::linear_part() const {
  const std::size_t n = vars();
  std::vector<std::vector<Coefficient>> rows(n, std::vector<Coefficient>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      rows[i][k] = images_[i].coefficient(Monomial::variable(n, k));
    }
  }
  return rows;
}

Coefficient determinant(const std::vector<std::vector<Coefficient>>& matrix) {
  // Expansion along rows, memoized on the set of used columns.
  const std::size_t n = matrix.size();
  if (n == 0) return Coefficient::one();
  if (n > 20) throw AmbientTooLarge("determinant limited to 20 variables");
  std::vector<Coefficient> minors(std::size_t{1} << n);
  minors[0] = Coefficient::one();
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    const auto row = static_cast<std::size_t>(__builtin_popcountll(mask)) - 1;
    Coefficient total;
    int sign = 1;
    // Columns in increasing order; sign by the number of chosen columns above.
    for (std::size_t col = n; col-- > 0;) {
      if (!(mask & (std::size_t{1} << col))) continue;
      const auto& entry = matrix[row][col];
      if (!entry.is_zero()) {
        const auto& rest = minors[mask & ~(std::size_t{1} << col)];
        if (sign > 0) total += entry * rest;
        else total -= entry * rest;
      }
      sign = -sign;
    }
    minors[mask] = total;
  }
  return minors.back();
}

TruncatedPolynomial substitute(const TruncatedPolynomial& f, const Substitution& s) {
  if (f.vars() != s.vars()) throw DimensionMismatch("substitute: variable counts differ");
  const auto cutoff = min_cutoff(f.cutoff(), s.cutoff());
  PowerTable table(s, cutoff);
  return substitute_with(f, table, s.vars(), cutoff);
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  if (outer.vars() != inner.vars()) throw DimensionMismatch("compose: variable counts differ");
  const auto cutoff = min_cutoff(outer.cutoff(), inner.cutoff());
  PowerTable table(outer, cutoff);
  std::vector<TruncatedPolynomial> images;
  for (const auto& f : inner.images()) {
    images.push_back(substitute_with(f, table, outer.vars(), cutoff));
  }
  return Substitution(std::move(images), cutoff);
}

Substitution invert(const Substitution& s, std::optional<std::uint32_t> cutoff) {
  const auto n_opt = cutoff ? cutoff : s.cutoff();
  if (!n_opt) throw CutoffTooSmall("inversion needs a cutoff");
  const std::uint32_t N = std::max<std::uint32_t>(*n_opt, 2);
  const std::size_t n = s.vars();
  const std::uint32_t p = characteristic_of(s.images());

  const auto L = s.linear_part();
  const auto det = determinant(L);
  const auto det_value = det.as_constant();
  if (!det_value || det_value->is_zero()) {
    throw SingularLinearPart("inverse needs a linear part with constant nonzero determinant");
  }
  const Coefficient det_inverse(det_value->inverse());

  // L^{-1} = adj(L) / det(L) via cofactors.
  std::vector<std::vector<Coefficient>> Linv(n, std::vector<Coefficient>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Coefficient>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<Coefficient> row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != i) row.push_back(L[r][c]);
        }
        minor.push_back(std::move(row));
      }
      Coefficient cof = determinant(minor) * det_inverse;
      Linv[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  }

  // Nonlinear part H = s - L x, truncated at N.
  std::vector<TruncatedPolynomial> H;
  for (std::size_t i = 0; i < n; ++i) {
    TruncatedPolynomial h = s.image(i).truncated(N);
    for (std::size_t k = 0; k < n; ++k) {
      h.add_term(Monomial::variable(n, k), -L[i][k]);
    }
    H.push_back(std::move(h));
  }

  // u = L^{-1}(x - H(u)); each round fixes one more degree.
  std::vector<TruncatedPolynomial> u;
  for (std::size_t i = 0; i < n; ++i) u.emplace_back(n, N);
  for (std::uint32_t round = 0; round < N; ++round) {
    std::vector<TruncatedPolynomial> rhs;
    std::vector<TruncatedPolynomial> hu;
    if (round == 0) {
      for (std::size_t i = 0; i < n; ++i) hu.emplace_back(n, N);
    } else {
      Substitution us(u, N);
      for (const auto& h : H) hu.push_back(substitute(h, us));
    }
    for (std::size_t i = 0; i < n; ++i) {
      TruncatedPolynomial r = TruncatedPolynomial::variable(n, i, N, p);
      r -= hu[i];
      rhs.push_back(std::move(r));
    }
    std::vector<TruncatedPolynomial> next;
    for (std::size_t i = 0; i < n; ++i) {
      TruncatedPolynomial acc(n, N);
      for (std::size_t j = 0; j < n; ++j) {
        if (!Linv[i][j].is_zero()) acc += rhs[j].scaled(Linv[i][j]);
      }
      next.push_back(std::move(acc));
    }
    if (next == u) break;
    u = std::move(next);
  }
  return Substitution(std::move(u), N);
}

Substitution elementary(std::size_t vars, std::size_t index, const Monomial& f, bool generic,
                        std::uint32_t characteristic, std::optional<std::uint32_t> cutoff) {
  if (index >= vars) throw DimensionMismatch("elementary: variable index out of range");
  if (f.vars() != vars) throw DimensionMismatch("elementary: monomial has the wrong length");
  if (f.is_unit()) throw InputError("elementary substitution needs a non-constant monomial");
  std::vector<TruncatedPolynomial> images;
  for (std::size_t i = 0; i < vars; ++i) {
    images.push_back(TruncatedPolynomial::variable(vars, i, cutoff, characteristic));
  }
  const Coefficient c =
      generic ? Coefficient::parameter(0, characteristic) : Coefficient::one(characteristic);
  images[index].add_term(f, c);
  return Substitution(std::move(images), cutoff);
}

bool preserves_ideal(const Substitution& s, const MonomialIdeal& ideal) {
  if (s.vars() != ideal.vars()) throw DimensionMismatch("preserves_ideal: variable counts differ");
  // Every monomial of degree >= N lies in I, so truncating there loses nothing.
  const std::uint32_t N = nilpotency_index(ideal);
  if (s.cutoff() && *s.cutoff() < N) {
    throw CutoffTooSmall("substitution cutoff is below the nilpotency index of the ideal");
  }
  PowerTable table(s, N);
  for (const auto& g : ideal.generators()) {
    const auto image = substitute_with(TruncatedPolynomial::term(g, Coefficient::one()), table,
                                       s.vars(), N);
    for (const auto& [m, c] : image.terms()) {
      if (!ideal.contains(m)) return false;
    }
  }
  return true;
}

}  // namespace aligncorr
