#include "hopfcert/matrix.hpp"

#include <algorithm>

namespace hopfcert {

Matrix Matrix::identity(const Field& field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const Field& field, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_columns(const Field& field, const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw InvalidInput("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InvalidInput("matrix product dimension mismatch");
  const Field& f = a.field();
  Matrix c(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto crow = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      axpy(f, crow, b.row(k), aik);
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix sum dimension mismatch");
  Matrix c = a;
  add_scaled(c, b, 1);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InvalidInput("matrix difference dimension mismatch");
  Matrix c = a;
  add_scaled(c, b, a.field().neg(1));
  return c;
}

Matrix scaled(const Matrix& a, Elem c) {
  Matrix out = a;
  for (std::size_t r = 0; r < out.rows(); ++r) scale_in_place(a.field(), out.row(r), c);
  return out;
}

void add_scaled(Matrix& a, const Matrix& b, Elem c) {
  if (c == 0) return;
  for (std::size_t r = 0; r < a.rows(); ++r) axpy(a.field(), a.row(r), b.row(r), c);
}

Vec mat_vec(const Matrix& m, std::span<const Elem> v) {
  const Field& f = m.field();
  Vec out(m.rows(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Elem acc = 0;
    auto row = m.row(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (v[c] != 0 && row[c] != 0) acc = f.fma(acc, row[c], v[c]);
    out[r] = acc;
  }
  return out;
}

Vec apply_left(std::span<const Elem> w, const Matrix& m) {
  Vec out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (w[r] != 0) axpy(m.field(), out, m.row(r), w[r]);
  return out;
}

void axpy(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem c) {
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t i = 0; i < dst.size(); ++i)
      if (src[i] != 0) dst[i] = f.add(dst[i], src[i]);
    return;
  }
  for (std::size_t i = 0; i < dst.size(); ++i)
    if (src[i] != 0) dst[i] = f.fma(dst[i], c, src[i]);
}

void scale_in_place(const Field& f, std::span<Elem> v, Elem c) {
  for (auto& e : v) e = f.mul(e, c);
}

bool is_zero(std::span<const Elem> v) {
  return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

Vec vec_add(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(a.begin(), a.end());
  axpy(f, out, b, 1);
  return out;
}

Vec vec_sub(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
  Vec out(a.begin(), a.end());
  axpy(f, out, b, f.neg(1));
  return out;
}

Vec unit_vector(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

std::vector<std::size_t> rref_in_place(Matrix& m) {
  const Field& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < m.cols() && prow < m.rows(); ++col) {
    std::size_t sel = prow;
    while (sel < m.rows() && m(sel, col) == 0) ++sel;
    if (sel == m.rows()) continue;
    m.swap_rows(prow, sel);
    const Elem inv = f.inv(m(prow, col));
    scale_in_place(f, m.row(prow), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow) continue;
      const Elem c = m(r, col);
      if (c != 0) axpy(f, m.row(r), m.row(prow), f.neg(c));
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return rref_in_place(m).size(); }

std::vector<Vec> kernel(const Matrix& m) {
  Matrix r = m;
  const auto pivots = rref_in_place(r);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(r(i, free));
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<Vec> solve(const Matrix& m, std::span<const Elem> b) {
  if (b.size() != m.rows()) throw InvalidInput("solve: right-hand side has wrong length");
  Matrix aug(m.field(), m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, m.cols()) = b[r];
  }
  const auto pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vec x(m.cols(), 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw InvalidInput("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug.row(r).begin());
    aug(r, n + r) = 1;
  }
  const auto pivots = rref_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    std::copy(aug.row(r).begin() + n, aug.row(r).end(), inv.row(r).begin());
  return inv;
}

}  // namespace hopfcert
