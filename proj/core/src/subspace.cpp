#include "hopfcert/subspace.hpp"

#include <algorithm>

namespace hopfcert {

Subspace Subspace::span(const Field& field, std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Subspace s(field, ambient_dim);
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) throw InvalidInput("spanning vector has wrong length");
    s.insert(v);
    if (s.is_whole()) break;
  }
  return s;
}

Subspace Subspace::whole(const Field& field, std::size_t ambient_dim) {
  Subspace s(field, ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(unit_vector(ambient_dim, i));
    s.pivots_.push_back(i);
  }
  return s;
}

Vec Subspace::reduce(Vec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Elem c = v[pivots_[i]];
    if (c != 0) axpy(field_, v, rows_[i], field_.neg(c));
  }
  return v;
}

bool Subspace::insert(Vec v) {
  if (v.size() != ambient_) throw InvalidInput("vector length does not match subspace ambient dimension");
  v = reduce(std::move(v));
  std::size_t piv = 0;
  while (piv < ambient_ && v[piv] == 0) ++piv;
  if (piv == ambient_) return false;
  scale_in_place(field_, v, field_.inv(v[piv]));
  for (auto& row : rows_) {
    const Elem c = row[piv];
    if (c != 0) axpy(field_, row, v, field_.neg(c));
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, piv);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

bool Subspace::contains(const Vec& v) const { return hopfcert::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const Vec& v) { return contains(v); });
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Vec Subspace::combine(const Vec& coords) const {
  Vec out(ambient_, 0);
  for (std::size_t i = 0; i < rows_.size(); ++i) axpy(field_, out, rows_[i], coords[i]);
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& v : other.rows_) s.insert(v);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // x = sum b_j w_j lies in *this iff sum b_j reduce(w_j) = 0.
  const auto& w = other.rows_;
  Subspace out(field_, ambient_);
  if (w.empty() || rows_.empty()) return out;
  Matrix remainders(field_, ambient_, w.size());
  for (std::size_t j = 0; j < w.size(); ++j) {
    const Vec r = reduce(w[j]);
    for (std::size_t i = 0; i < ambient_; ++i) remainders(i, j) = r[i];
  }
  for (const auto& b : kernel(remainders)) out.insert(other.combine(b));
  return out;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t p = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (p < pivots_.size() && pivots_[p] == i) {
      ++p;
      continue;
    }
    out.push_back(i);
  }
  return out;
}

QuotientMap::QuotientMap(Subspace kernel)
    : kernel_(std::move(kernel)), complement_(kernel_.complement_indices()) {}

Vec QuotientMap::project(const Vec& v) const {
  const Vec r = kernel_.reduce(v);
  Vec out(complement_.size());
  for (std::size_t i = 0; i < complement_.size(); ++i) out[i] = r[complement_[i]];
  return out;
}

Vec QuotientMap::lift(const Vec& coords) const {
  Vec out(kernel_.ambient_dim(), 0);
  for (std::size_t i = 0; i < complement_.size(); ++i) out[complement_[i]] = coords[i];
  return out;
}

}  // namespace hopfcert
