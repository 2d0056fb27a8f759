#pragma once

#include <cstdint>
#include <vector>

#include "aligncorr/scalar.hpp"

namespace aligncorr {

using Vector = std::vector<Scalar>;

/// Subspace of K^d kept in reduced row echelon form (pivot = first nonzero
/// entry, pivot entries 1, rows ordered by pivot). Two subspaces are equal
/// iff their echelon bases are equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0, std::uint32_t characteristic = 0)
      : ambient_(ambient), characteristic_(characteristic) {}

  std::size_t ambient() const { return ambient_; }
  std::size_t dimension() const { return rows_.size(); }
  std::uint32_t characteristic() const { return characteristic_; }
  const std::vector<Vector>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  /// Remainder of v after clearing all pivot columns.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(const Vector& v);

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t ambient_;
  std::uint32_t characteristic_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient,
              std::uint32_t characteristic = 0);
std::size_t rank(const std::vector<Vector>& rows, std::size_t columns,
                 std::uint32_t characteristic = 0);
/// Basis of {x : A x = 0}; A given by rows of length `columns`. The basis is
/// normalized so that each vector has a 1 in its own free column.
std::vector<Vector> nullspace(const std::vector<Vector>& rows, std::size_t columns,
                              std::uint32_t characteristic = 0);

}  // namespace aligncorr
