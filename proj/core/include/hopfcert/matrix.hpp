#pragma once

// Dense matrices over GF(p^k) and the row-reduction kernels everything else is built on.
// Matrices act on column vectors; a module action rho(b) sends v to rho(b) * v.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfcert/field.hpp"

namespace hopfcert {

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(const Field& field, std::size_t n);
  static Matrix from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols);
  static Matrix from_columns(const Field& field, const std::vector<Vec>& cols, std::size_t rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_}; }
  Vec column(std::size_t c) const;

  const std::vector<Elem>& data() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_ &&
           (a.rows_ * a.cols_ == 0 || a.field_ == b.field_);
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  /// Lexicographic order on (rows, cols, entries); used for canonical labels.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix scaled(const Matrix& a, Elem c);
/// a += c * b
void add_scaled(Matrix& a, const Matrix& b, Elem c);

Vec mat_vec(const Matrix& m, std::span<const Elem> v);
/// Row vector times matrix: w * m.
Vec apply_left(std::span<const Elem> w, const Matrix& m);

// Vector helpers over a field.
void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c);
void scale_in_place(const Field& f, std::span<Elem> v, Elem c);
bool is_zero(std::span<const Elem> v);
Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b);
Vec unit_vector(std::size_t n, std::size_t i);

/// Brings m to reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref_in_place(Matrix& m);
std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}; one vector per free column, in column order.
std::vector<Vec> kernel(const Matrix& m);

/// Some x with m x = b, or nothing.
std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace hopfcert
