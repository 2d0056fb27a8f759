#include "aligncorr/linear_algebra.hpp"

#include <algorithm>

#include "aligncorr/errors.hpp"

namespace aligncorr {

namespace {

std::size_t leading(const Vector& v) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) return k;
  }
  return v.size();
}

}  // namespace

Vector Subspace::reduce(Vector v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match subspace");
  if (characteristic_ != 0) {
    for (auto& x : v) x = x.in_field(characteristic_);
  }
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    for (std::size_t k = p; k < ambient_; ++k) {
      if (!rows_[r][k].is_zero()) v[k] -= factor * rows_[r][k];
    }
  }
  return v;
}

bool Subspace::contains(const Vector& v) const {
  const Vector rest = reduce(v);
  return leading(rest) == rest.size();
}

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [&](const Vector& v) { return contains(v); });
}

bool Subspace::insert(const Vector& v) {
  Vector rest = reduce(v);
  const std::size_t p = leading(rest);
  if (p == rest.size()) return false;
  const Scalar inv = rest[p].inverse();
  for (std::size_t k = p; k < ambient_; ++k) {
    if (!rest[k].is_zero()) rest[k] *= inv;
  }
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    for (std::size_t k = p; k < ambient_; ++k) {
      if (!rest[k].is_zero()) row[k] -= factor * rest[k];
    }
  }
  const auto pos = static_cast<std::size_t>(
      std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin());
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), p);
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(rest));
  return true;
}

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient,
              std::uint32_t characteristic) {
  Subspace s(ambient, characteristic);
  for (const auto& v : vectors) {
    s.insert(v);
    if (s.dimension() == ambient) break;
  }
  return s;
}

std::size_t rank(const std::vector<Vector>& rows, std::size_t columns,
                 std::uint32_t characteristic) {
  return span(rows, columns, characteristic).dimension();
}

std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t columns,
                              std::uint32_t characteristic) {
  const Subspace s = span(rows, columns, characteristic);
  std::vector<bool> is_pivot(columns, false);
  for (auto p : s.pivots()) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < columns; ++free) {
    if (is_pivot[free]) continue;
    Vector v(columns, Scalar::zero(characteristic));
    v[free] = Scalar::one(characteristic);
    for (std::size_t r = 0; r < s.dimension(); ++r) {
      v[s.pivots()[r]] = -s.basis()[r][free];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace aligncorr
