#include "aligncorr/flags.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "aligncorr/errors.hpp"

namespace aligncorr {

VariablePreorder::VariablePreorder(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  const std::size_t n = leq_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (leq_[i].size() != n) throw DimensionMismatch("preorder matrix is not square");
    if (!leq_[i][i]) throw NonTransitiveRelation("preorder is not reflexive at x" + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq_[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq_[j][k] && !leq_[i][k]) {
          throw NonTransitiveRelation("x" + std::to_string(i + 1) + " <= x" + std::to_string(j + 1) +
                                      " <= x" + std::to_string(k + 1) + " but not x" +
                                      std::to_string(i + 1) + " <= x" + std::to_string(k + 1));
        }
      }
    }
  }
}

std::vector<std::vector<std::size_t>> VariablePreorder::classes() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(vars(), false);
  for (std::size_t i = 0; i < vars(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t j = i; j < vars(); ++j) {
      if (equivalent(i, j)) {
        cls.push_back(j);
        seen[j] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<std::size_t> VariablePreorder::class_of() const {
  std::vector<std::size_t> out(vars());
  const auto cls = classes();
  for (std::size_t c = 0; c < cls.size(); ++c) {
    for (auto i : cls[c]) out[i] = c;
  }
  return out;
}

VariablePreorder preorder_from_measuring(const MeasuringSequence& a) {
  const std::size_t n = a.vars();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) leq[i][j] = a[j].contains(Monomial::variable(n, i));
  }
  return VariablePreorder(std::move(leq));
}

std::size_t FlagSequence::vars() const {
  std::size_t n = 0;
  for (const auto& c : classes) n += c.size();
  return n;
}

std::vector<MonomialIdeal> FlagSequence::ideals() const {
  const std::size_t n = vars();
  std::vector<MonomialIdeal> out;
  std::vector<Monomial> gens = MonomialIdeal::maximal_power(n, 2).generators();
  for (const auto& c : classes) {
    for (auto i : c) gens.push_back(Monomial::variable(n, i));
    out.emplace_back(n, gens);
  }
  return out;
}

std::vector<std::size_t> FlagSequence::positions() const {
  std::vector<std::size_t> out(vars());
  for (std::size_t k = 0; k < classes.size(); ++k) {
    for (auto i : classes[k]) out[i] = k;
  }
  return out;
}

std::vector<FlagSequence> enumerate_completions(const VariablePreorder& pre) {
  const auto cls = pre.classes();
  const std::size_t m = cls.size();
  // below[c][d]: class c strictly below class d.
  std::vector<std::vector<bool>> below(m, std::vector<bool>(m, false));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t d = 0; d < m; ++d) below[c][d] = c != d && pre.leq(cls[c][0], cls[d][0]);
  }
  std::vector<FlagSequence> out;
  std::vector<std::size_t> order;
  std::vector<bool> used(m, false);
  std::function<void()> extend = [&] {
    if (order.size() == m) {
      FlagSequence flag;
      for (auto c : order) flag.classes.push_back(cls[c]);
      out.push_back(std::move(flag));
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      bool minimal = true;
      for (std::size_t d = 0; d < m && minimal; ++d) minimal = used[d] || !below[d][c];
      if (!minimal) continue;
      used[c] = true;
      order.push_back(c);
      extend();
      order.pop_back();
      used[c] = false;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

bool is_completion(const VariablePreorder& pre, const FlagSequence& flag) {
  const std::size_t n = pre.vars();
  if (flag.vars() != n) return false;
  std::vector<int> seen(n, 0);
  for (const auto& c : flag.classes) {
    if (c.empty()) return false;
    for (auto i : c) {
      if (i >= n || seen[i]++) return false;
    }
  }
  const auto pos = flag.positions();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (pre.equivalent(i, j) != (pos[i] == pos[j])) return false;
      if (pre.leq(i, j) && pos[i] > pos[j]) return false;
    }
  }
  return true;
}

CoordinateSet coordinate_set(const MeasuringSequence& a, const FlagSequence& flag) {
  const auto pre = preorder_from_measuring(a);
  if (!is_completion(pre, flag)) {
    throw IncompatibleFlag("flag is not a completion of the measuring preorder");
  }
  const std::size_t n = a.vars();
  const auto pos = flag.positions();
  CoordinateSet out;
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& v : standard_monomials(a[i])) {
      if (v.degree() == 0) continue;
      if (v.degree() == 1) {
        const auto j = static_cast<std::size_t>(
            std::find(v.exponents().begin(), v.exponents().end(), 1u) - v.exponents().begin());
        if (!(pos[j] < pos[i])) continue;
      }
      out.push_back({i, v});
    }
  }
  std::sort(out.begin(), out.end(), [](const CoordinatePair& p, const CoordinatePair& q) {
    if (p.i != q.i) return p.i < q.i;
    if (p.v.degree() != q.v.degree()) return p.v.degree() < q.v.degree();
    return p.v > q.v;
  });
  return out;
}

std::vector<std::string> parameter_names(std::size_t count) {
  std::vector<std::string> letters;
  for (char c = 'a'; c <= 'z'; ++c) {
    if (c != 't' && c != 'x') letters.emplace_back(1, c);
  }
  std::vector<std::string> out;
  for (std::size_t k = 0; k < count; ++k) {
    out.push_back(count <= letters.size() ? letters[k] : "a_" + std::to_string(k + 1));
  }
  return out;
}

std::size_t total_dimension(const MeasuringSequence& a) {
  std::size_t total = 0;
  for (const auto& A : a.ideals) total += colength(A);
  return total;
}

std::size_t total_dimension(const std::vector<MonomialIdeal>& ideals, std::uint32_t characteristic) {
  return total_dimension(measuring_sequence(ideals, characteristic));
}

DimensionDecomposition fiber_dimension_decomposition(const MeasuringSequence& a,
                                                     const FlagSequence& flag) {
  DimensionDecomposition d;
  d.base = a.vars();
  d.coord_count = coordinate_set(a, flag).size();
  // Schubert cells: V_k has dimension cod(B_k) = colength(B_k) - 1, and the
  // step from V_{k+1} to V_k adds (dim V_k - dim V_{k+1}) (n - dim V_k).
  const auto B = flag.ideals();
  std::vector<std::size_t> cod;
  for (const auto& b : B) cod.push_back(colength(b) - 1);
  cod.push_back(0);
  for (std::size_t k = 0; k + 1 < cod.size(); ++k) {
    d.flag_dim += (cod[k] - cod[k + 1]) * (d.base - cod[k]);
  }
  return d;
}

MonomialIdeal permute(const MonomialIdeal& ideal, const std::vector<std::size_t>& sigma) {
  std::vector<Monomial> gens;
  for (const auto& g : ideal.generators()) {
    std::vector<std::uint32_t> e(ideal.vars(), 0);
    for (std::size_t i = 0; i < ideal.vars(); ++i) e[sigma[i]] = g[i];
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.vars(), std::move(gens));
}

EtaleReport etale_report(const MeasuringSequence& a) {
  const std::size_t n = a.vars();
  if (n > 8) throw AmbientTooLarge("etale degree enumerates permutations; n must be at most 8");
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  EtaleReport report;
  do {
    const bool fixes_input = std::all_of(a.source.begin(), a.source.end(), [&](const MonomialIdeal& I) {
      return permute(I, sigma) == I;
    });
    if (!fixes_input) continue;
    ++report.stabilizer;
    const bool fixes_a = std::all_of(a.ideals.begin(), a.ideals.end(), [&](const MonomialIdeal& A) {
      return permute(A, sigma) == A;
    });
    if (fixes_a) ++report.fixing_measuring;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return report;
}

std::size_t etale_degree(const std::vector<MonomialIdeal>& ideals, std::uint32_t characteristic) {
  validate_sequence(ideals);
  if (ideals.front().vars() > 8) {
    throw AmbientTooLarge("etale degree enumerates permutations; n must be at most 8");
  }
  return etale_report(measuring_sequence(ideals, characteristic)).degree();
}

bool monomials_equivalent(const Monomial& v, const Monomial& w, const VariablePreorder& pre) {
  for (const auto& cls : pre.classes()) {
    std::uint64_t dv = 0, dw = 0;
    for (auto i : cls) {
      dv += v[i];
      dw += w[i];
    }
    if (dv != dw) return false;
  }
  return true;
}

std::vector<std::vector<std::size_t>> coordinate_equivalence(const CoordinateSet& coords,
                                                             const VariablePreorder& pre) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(coords.size(), false);
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (seen[k]) continue;
    std::vector<std::size_t> cls;
    for (std::size_t l = k; l < coords.size(); ++l) {
      if (!seen[l] && pre.equivalent(coords[k].i, coords[l].i) &&
          monomials_equivalent(coords[k].v, coords[l].v, pre)) {
        cls.push_back(l);
        seen[l] = true;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace aligncorr
