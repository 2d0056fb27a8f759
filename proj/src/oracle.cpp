#include "aligncorr/oracle.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>

#include "aligncorr/errors.hpp"
#include "aligncorr/scalar.hpp"

namespace aligncorr {

namespace {

using Exps = std::vector<std::uint32_t>;

bool divides_exps(const Exps& a, const Exps& b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

bool in_ideal(const MonomialIdeal& I, const Exps& m) {
  return std::any_of(I.generators().begin(), I.generators().end(),
                     [&](const Monomial& g) { return divides_exps(g.exponents(), m); });
}

std::uint32_t degree_of(const Exps& e) { return std::accumulate(e.begin(), e.end(), 0u); }

/// All exponent vectors of degree < N, by increasing degree.
std::vector<Exps> exponents_below(std::size_t n, std::uint32_t N) {
  std::vector<Exps> out;
  Exps current(n, 0);
  for (std::uint32_t d = 0; d < N; ++d) {
    std::vector<Exps> level;
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t left) {
      if (k + 1 == n) {
        current[k] = left;
        level.push_back(current);
        return;
      }
      for (std::uint32_t e = left + 1; e-- > 0;) {
        current[k] = e;
        rec(k + 1, left - e);
      }
    };
    rec(0, d);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      const mpq_class factor = rows[k][c] / rows[r][c];
      for (std::size_t x = c; x < cols; ++x) rows[k][x] -= factor * rows[r][x];
    }
    ++r;
  }
  return r;
}

std::size_t tangent_rank(const std::vector<MonomialIdeal>& ideals, std::uint32_t N) {
  const std::size_t n = ideals.front().vars();
  const auto unknowns = exponents_below(n, N);
  const std::size_t cols = n * unknowns.size();
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& I : ideals) {
    // Standard monomials of I, found by scanning below its pure powers.
    std::vector<Exps> standard;
    for (const auto& s : exponents_below(n, N)) {
      if (!in_ideal(I, s)) standard.push_back(s);
    }
    std::map<Exps, std::size_t> row_of;
    for (const auto& g : I.generators()) {
      const std::size_t base = rows.size();
      for (std::size_t k = 0; k < standard.size(); ++k) row_of[standard[k]] = base + k;
      rows.resize(rows.size() + standard.size(), std::vector<mpq_class>(cols, 0));
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] == 0) continue;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          Exps target = unknowns[u];
          for (std::size_t k = 0; k < n; ++k) target[k] += g[k];
          target[i] -= 1;
          auto it = row_of.find(target);
          if (it != row_of.end()) rows[it->second][i * unknowns.size() + u] += g[i];
        }
      }
    }
  }
  return rational_rank(std::move(rows), cols);
}

}  // namespace

TangentResult tangent_orbit_dimension(const std::vector<MonomialIdeal>& ideals,
                                      std::optional<std::uint32_t> cutoff) {
  if (ideals.empty()) throw InputError("empty ideal sequence");
  std::uint32_t N = 0;
  if (cutoff) {
    N = *cutoff;
  } else {
    std::uint32_t nil = 1, gen = 0;
    for (const auto& I : ideals) {
      if (!has_finite_colength(I)) throw InfiniteColength("tangent dimension needs finite colength");
      nil = std::max(nil, nilpotency_index(I));
      for (const auto& g : I.generators()) gen = std::max<std::uint32_t>(gen, static_cast<std::uint32_t>(g.degree()));
    }
    N = nil + gen;
  }
  for (int attempt = 0; attempt < 2; ++attempt) {
    const auto here = tangent_rank(ideals, N);
    const auto next = tangent_rank(ideals, N + 1);
    if (here == next) return {here, N};
    ++N;
  }
  throw CutoffTooSmall("tangent dimension still changes at cutoff " + std::to_string(N));
}

std::uint64_t enumeration_size(std::size_t vars, std::uint32_t p, std::uint32_t cutoff) {
  cutoff = std::max<std::uint32_t>(cutoff, 2);
  std::uint64_t free_terms = exponents_below(vars, cutoff).size() - 2;  // minus 1 and x_i
  std::uint64_t size = p - 1;
  for (std::uint64_t k = 0; k < free_terms; ++k) {
    size *= p;
    if (size > kEnumerationLimit) return size;
  }
  return size;
}

namespace {

/// Sparse polynomial over F_p truncated at degree N.
using ModPoly = std::map<Exps, std::uint32_t>;

ModPoly multiply(const ModPoly& a, const ModPoly& b, std::uint32_t p, std::uint32_t N) {
  ModPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exps e = ea;
      for (std::size_t k = 0; k < e.size(); ++k) e[k] += eb[k];
      if (degree_of(e) >= N) continue;
      auto& slot = out[e];
      slot = static_cast<std::uint32_t>((slot + std::uint64_t{ca} * cb) % p);
      if (slot == 0) out.erase(e);
    }
  }
  return out;
}

struct EnumerationTask {
  std::size_t i;
  const std::vector<MonomialIdeal>* ideals;
  std::uint32_t p;
  std::uint32_t N;
  std::vector<Exps> terms;  ///< the free monomials (degree >= 1, not x_i)
};

std::set<Exps> enumerate_slice(const EnumerationTask& task, std::uint32_t scale,
                               std::uint32_t first_coefficient) {
  const std::size_t n = task.ideals->front().vars();
  const std::size_t F = task.terms.size();
  std::vector<std::uint32_t> digits(F, 0);
  if (F > 0) digits[0] = first_coefficient;
  std::set<Exps> support;
  Exps xi(n, 0);
  xi[task.i] = 1;
  for (;;) {
    ModPoly image{{xi, scale}};
    for (std::size_t k = 0; k < F; ++k) {
      if (digits[k]) image[task.terms[k]] = digits[k];
    }
    bool preserves = true;
    for (const auto& I : *task.ideals) {
      std::vector<ModPoly> powers{ModPoly{{Exps(n, 0), 1}}};
      for (const auto& g : I.generators()) {
        while (powers.size() <= g[task.i]) powers.push_back(multiply(powers.back(), image, task.p, task.N));
        Exps rest = g.exponents();
        rest[task.i] = 0;
        for (const auto& [e, c] : powers[g[task.i]]) {
          Exps m = e;
          for (std::size_t k = 0; k < n; ++k) m[k] += rest[k];
          if (degree_of(m) < task.N && !in_ideal(I, m)) {
            preserves = false;
            break;
          }
        }
        if (!preserves) break;
      }
      if (!preserves) break;
    }
    if (preserves) {
      for (const auto& [e, c] : image) support.insert(e);
    }
    // Next assignment; digit 0 is fixed by the slice.
    std::size_t k = 1;
    while (k < F) {
      if (++digits[k] < task.p) break;
      digits[k] = 0;
      ++k;
    }
    if (k >= F) break;
  }
  return support;
}

}  // namespace

MonomialIdeal enumerate_images(std::size_t i, const std::vector<MonomialIdeal>& ideals,
                               std::uint32_t p, std::uint32_t cutoff) {
  if (ideals.empty()) throw InputError("empty ideal sequence");
  if (!is_prime(p)) throw InputError("enumeration needs a prime characteristic");
  const std::size_t n = ideals.front().vars();
  if (i >= n) throw DimensionMismatch("variable index out of range");
  for (const auto& I : ideals) {
    if (I.vars() != n) throw DimensionMismatch("ideals live in different ambient dimensions");
    if (!has_finite_colength(I)) throw InfiniteColength("enumeration needs finite colength");
    if (nilpotency_index(I) > cutoff) {
      throw CutoffTooSmall("cutoff is below the nilpotency index of an input ideal");
    }
  }
  cutoff = std::max<std::uint32_t>(cutoff, 2);
  const auto size = enumeration_size(n, p, cutoff);
  if (size > kEnumerationLimit) {
    throw SearchSpaceTooLarge("enumeration would visit more than " +
                              std::to_string(kEnumerationLimit) + " substitutions");
  }

  EnumerationTask task{i, &ideals, p, cutoff, {}};
  for (const auto& e : exponents_below(n, cutoff)) {
    const auto d = degree_of(e);
    if (d == 0 || (d == 1 && e[i] == 1)) continue;
    task.terms.push_back(e);
  }
  // One worker per (scale, first free coefficient); union is order independent.
  std::vector<std::future<std::set<Exps>>> jobs;
  const std::uint32_t first_values = task.terms.empty() ? 1 : p;
  for (std::uint32_t scale = 1; scale < p; ++scale) {
    for (std::uint32_t first = 0; first < first_values; ++first) {
      jobs.push_back(std::async(std::launch::async, enumerate_slice, std::cref(task), scale, first));
    }
  }
  std::set<Exps> support;
  for (auto& job : jobs) {
    auto part = job.get();
    support.insert(part.begin(), part.end());
  }
  std::vector<Monomial> gens;
  for (const auto& e : support) gens.emplace_back(e);
  for (const auto& e : exponents_below(n, cutoff + 1)) {
    if (degree_of(e) == cutoff) gens.emplace_back(e);
  }
  return MonomialIdeal(n, std::move(gens));
}

std::size_t count_linear_extensions(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  // Representatives of the mutual-comparability classes.
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < n; ++i) {
    bool fresh = true;
    for (auto r : reps) fresh = fresh && !(leq[i][r] && leq[r][i]);
    if (fresh) reps.push_back(i);
  }
  std::sort(reps.begin(), reps.end());
  std::size_t count = 0;
  do {
    bool ok = true;
    for (std::size_t a = 0; a < reps.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < reps.size() && ok; ++b) {
        // reps[b] comes later, so it must not be below reps[a].
        ok = !leq[reps[b]][reps[a]];
      }
    }
    if (ok) ++count;
  } while (std::next_permutation(reps.begin(), reps.end()));
  return count;
}

}  // namespace aligncorr
