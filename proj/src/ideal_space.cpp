#include "aligncorr/ideal_space.hpp"

#include "aligncorr/errors.hpp"

namespace aligncorr {

MonomialBasis::MonomialBasis(std::size_t vars, std::uint32_t cutoff)
    : vars_(vars), cutoff_(cutoff), monomials_(monomials_below(vars, cutoff)) {
  for (std::size_t k = 0; k < monomials_.size(); ++k) index_.emplace(monomials_[k], k);
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vector MonomialBasis::to_vector(const TruncatedPolynomial& f, std::uint32_t characteristic) const {
  Vector v(size(), Scalar::zero(characteristic));
  for (const auto& [m, c] : f.terms()) {
    auto k = index_of(m);
    if (!k) continue;
    auto value = c.as_constant();
    if (!value) throw InputError("linear algebra over R/m^N needs constant coefficients");
    v[*k] = value->in_field(characteristic);
  }
  return v;
}

TruncatedPolynomial MonomialBasis::to_polynomial(const Vector& v) const {
  TruncatedPolynomial f(vars_, cutoff_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) f.add_term(monomials_[k], Coefficient(v[k]));
  }
  return f;
}

namespace {

Vector unit_vector(std::size_t size, std::size_t k, std::uint32_t characteristic) {
  Vector v(size, Scalar::zero(characteristic));
  v[k] = Scalar::one(characteristic);
  return v;
}

/// m * v in R / m^N.
Vector shift(const Vector& v, const Monomial& m, const MonomialBasis& basis,
             std::uint32_t characteristic) {
  Vector out(basis.size(), Scalar::zero(characteristic));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    if (auto target = basis.index_of(basis[k] * m)) out[*target] += v[k];
  }
  return out;
}

Vector multiply(const Vector& a, const Vector& b, const MonomialBasis& basis,
                std::uint32_t characteristic) {
  Vector out(basis.size(), Scalar::zero(characteristic));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      if (basis[i].degree() + basis[j].degree() >= basis.cutoff()) continue;
      if (auto target = basis.index_of(basis[i] * basis[j])) out[*target] += a[i] * b[j];
    }
  }
  return out;
}

}  // namespace

Subspace monomial_ideal_space(const MonomialIdeal& ideal, const MonomialBasis& basis,
                              std::uint32_t characteristic) {
  Subspace s(basis.size(), characteristic);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (ideal.contains(basis[k])) s.insert(unit_vector(basis.size(), k, characteristic));
  }
  return s;
}

Subspace ideal_generated_by(const std::vector<Vector>& generators, const MonomialBasis& basis,
                            std::uint32_t characteristic) {
  Subspace s(basis.size(), characteristic);
  for (const auto& g : generators) {
    for (const auto& m : basis.monomials()) {
      s.insert(shift(g, m, basis, characteristic));
      if (s.dimension() == basis.size()) return s;
    }
  }
  return s;
}

Subspace ideal_sum(const Subspace& a, const Subspace& b) {
  Subspace s = a;
  for (const auto& v : b.basis()) s.insert(v);
  return s;
}

Subspace ideal_product(const Subspace& a, const Subspace& b, const MonomialBasis& basis) {
  const auto p = common_characteristic(a.characteristic(), b.characteristic());
  // The unit ideal is the only subspace containing 1, and it is the identity.
  if (a.dimension() == basis.size()) return b;
  if (b.dimension() == basis.size()) return a;
  Subspace s(basis.size(), p);
  for (const auto& u : a.basis()) {
    for (const auto& v : b.basis()) {
      s.insert(multiply(u, v, basis, p));
      if (s.dimension() == basis.size()) return s;
    }
  }
  return s;
}

Subspace ideal_frobenius(const Subspace& a, const MonomialBasis& basis) {
  const std::uint32_t p = a.characteristic();
  if (p == 0) throw InputError("Frobenius needs a prime characteristic");
  // (sum c_m m)^p = sum c_m m^p over F_p, so powering is linear on a basis.
  std::vector<Vector> powers;
  for (const auto& v : a.basis()) {
    Vector out(basis.size(), Scalar::zero(p));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      if (basis[k].degree() * p >= basis.cutoff()) continue;
      out[*basis.index_of(basis[k].pow(p))] += v[k];
    }
    powers.push_back(std::move(out));
  }
  return ideal_generated_by(powers, basis, p);
}

bool is_ideal(const Subspace& a, const MonomialBasis& basis) {
  for (const auto& v : a.basis()) {
    for (std::size_t i = 0; i < basis.vars(); ++i) {
      if (!a.contains(shift(v, Monomial::variable(basis.vars(), i), basis, a.characteristic()))) {
        return false;
      }
    }
  }
  return true;
}

std::uint32_t substitution_characteristic(const Substitution& s) {
  std::uint32_t p = 0;
  for (const auto& f : s.images()) {
    for (const auto& [m, c] : f.terms()) p = common_characteristic(p, c.characteristic());
  }
  return p;
}

Subspace ideal_image_mod(const Substitution& s, const MonomialIdeal& ideal,
                         const MonomialBasis& basis) {
  if (s.vars() != ideal.vars() || basis.vars() != ideal.vars()) {
    throw DimensionMismatch("ideal image: variable counts differ");
  }
  const std::uint32_t p = substitution_characteristic(s);
  // s is an automorphism, so s(I) is generated by the images of generators.
  std::vector<Vector> images;
  for (const auto& g : ideal.generators()) {
    if (g.degree() >= basis.cutoff()) continue;
    auto f = substitute(TruncatedPolynomial::term(g, Coefficient::one(p), basis.cutoff()), s);
    images.push_back(basis.to_vector(f, p));
  }
  return ideal_generated_by(images, basis, p);
}

Subspace ideal_image_space(const Substitution& s, const MonomialIdeal& ideal,
                           std::uint32_t cutoff) {
  if (!ideal.contains(MonomialIdeal::maximal_power(ideal.vars(), cutoff))) {
    throw CutoffTooSmall("m^" + std::to_string(cutoff) + " is not contained in the ideal");
  }
  return ideal_image_mod(s, ideal, MonomialBasis(ideal.vars(), cutoff));
}

}  // namespace aligncorr
