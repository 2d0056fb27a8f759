#include "aligncorr/classifier.hpp"

#include <algorithm>

#include "aligncorr/errors.hpp"

namespace aligncorr {

std::string to_string(UniversalityVerdict::Kind kind) {
  switch (kind) {
    case UniversalityVerdict::Kind::NonUniversal: return "NonUniversal";
    case UniversalityVerdict::Kind::Dominates: return "Dominates";
    case UniversalityVerdict::Kind::TrivialFiber: return "TrivialFiber";
    case UniversalityVerdict::Kind::Unresolved: return "Unresolved";
  }
  return "?";
}

UniversalityVerdict::Kind verdict_kind_from_string(const std::string& name) {
  for (auto k : {UniversalityVerdict::Kind::NonUniversal, UniversalityVerdict::Kind::Dominates,
                 UniversalityVerdict::Kind::TrivialFiber, UniversalityVerdict::Kind::Unresolved}) {
    if (to_string(k) == name) return k;
  }
  throw ParseError("unknown verdict '" + name + "'");
}

namespace {

/// Variables occurring in v, with multiplicity (|v| entries).
std::vector<std::size_t> support_with_multiplicity(const Monomial& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.vars(); ++i) {
    for (std::uint32_t e = 0; e < v[i]; ++e) out.push_back(i);
  }
  return out;
}

UniversalityVerdict decide(int shape, std::size_t m, std::size_t l, bool dominates) {
  UniversalityVerdict v;
  v.kind = dominates ? UniversalityVerdict::Kind::Dominates : UniversalityVerdict::Kind::Unresolved;
  v.shape = shape;
  v.m = m;
  v.l = l;
  return v;
}

}  // namespace

UniversalityVerdict classify(const MeasuringSequence& a, const FlagSequence& flag) {
  const auto coords = coordinate_set(a, flag);
  if (coords.empty()) return {};
  const auto pre = preorder_from_measuring(a);
  if (coordinate_equivalence(coords, pre).size() >= 2) {
    return {UniversalityVerdict::Kind::NonUniversal, 0, 0, 0};
  }
  const auto cls = pre.class_of();
  std::vector<std::size_t> class_size(pre.classes().size(), 0);
  for (auto c : cls) ++class_size[c];

  // All coordinates are equivalent: one class for x_i, one degree profile for v.
  const std::size_t m = class_size[cls[coords.front().i]];
  const auto degree = coords.front().v.degree();
  const bool char2 = a.characteristic == 2;

  if (degree == 1) {
    const auto j = support_with_multiplicity(coords.front().v).front();
    const std::size_t l = class_size[cls[j]];
    return decide(1, m, l, m == 1 || l == 1);
  }
  if (degree == 2) {
    bool any_square = false;
    for (const auto& c : coords) {
      const auto s = support_with_multiplicity(c.v);
      any_square = any_square || s[0] == s[1];
    }
    const auto s = support_with_multiplicity(coords.front().v);
    const std::size_t j = s[0], k = s[1];
    if (pre.equivalent(j, k)) {
      const std::size_t l = class_size[cls[j]];
      if (char2 && !any_square) return decide(3, m, l, l == 2);
      return decide(2, m, l, l == 1);
    }
    if (char2) {
      const bool j_single = class_size[cls[j]] == 1;
      const bool k_single = class_size[cls[k]] == 1;
      if (j_single || k_single) {
        // Which index plays "j" is ambiguous; report the other one's class
        // size and accept if either reading meets the size condition.
        const std::size_t l = j_single ? class_size[cls[k]] : class_size[cls[j]];
        return decide(4, m, l, true);
      }
    }
  }
  throw UnmatchedCoordinateShape("a single coordinate class of degree " + std::to_string(degree) +
                                 " fits none of the known shapes");
}

UniversalityVerdict classify(const std::vector<MonomialIdeal>& ideals, std::uint32_t characteristic) {
  const auto a = measuring_sequence(ideals, characteristic);
  const auto flags = enumerate_completions(preorder_from_measuring(a));
  return classify(a, flags.front());
}

}  // namespace aligncorr
