#pragma once

// Subspaces of GF(q)^n carried as reduced row echelon bases. Equal subspaces have
// bit-identical bases, so equality is a vector compare.

#include <cstddef>
#include <vector>

#include "hopfcert/field.hpp"
#include "hopfcert/matrix.hpp"

namespace hopfcert {

class Subspace {
 public:
  Subspace() = default;
  Subspace(Field field, std::size_t ambient_dim) : field_(std::move(field)), ambient_(ambient_dim) {}

  static Subspace span(const Field& field, std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace whole(const Field& field, std::size_t ambient_dim);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_whole() const { return rows_.size() == ambient_; }

  /// RREF rows, sorted by pivot column.
  const std::vector<Vec>& basis() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Matrix basis_matrix() const { return Matrix::from_rows(field_, rows_, ambient_); }

  /// Adds v to the span; returns true if the dimension grew.
  bool insert(Vec v);

  /// v minus its component along the basis at the pivot columns (zero iff v is in the span).
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member v with respect to basis(); these are v's pivot entries.
  Vec coordinates(const Vec& v) const;
  /// Sum of coords[i] * basis()[i].
  Vec combine(const Vec& coords) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  /// Non-pivot coordinates: the greedy complement in row-echelon order.
  std::vector<std::size_t> complement_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.rows_ == b.rows_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }
  friend bool operator<(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) return a.ambient_ < b.ambient_;
    if (a.rows_.size() != b.rows_.size()) return a.rows_.size() < b.rows_.size();
    return a.rows_ < b.rows_;
  }

 private:
  Field field_;
  std::size_t ambient_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
};

/// Coordinates on V/W using the complement indices of W.
class QuotientMap {
 public:
  explicit QuotientMap(Subspace kernel);

  const Subspace& kernel() const { return kernel_; }
  std::size_t dim() const { return complement_.size(); }
  const std::vector<std::size_t>& complement() const { return complement_; }

  Vec project(const Vec& v) const;
  /// Lift of quotient coordinates: the vector supported on the complement indices.
  Vec lift(const Vec& coords) const;

 private:
  Subspace kernel_;
  std::vector<std::size_t> complement_;
};

}  // namespace hopfcert
