#include "mpinv/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "mpinv/error.hpp"

namespace mpinv {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> values) {
  if (values.size() != rows_ || c >= cols_) throw DimensionError("set_column: shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = values[r];
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::conjugate() const {
  Matrix m = *this;
  for (auto& s : m.data_) s = s.conj();
  return m;
}

Matrix Matrix::adjoint_standard() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] >= cols_) throw DimensionError("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) m(r, k) = (*this)(r, cols[k]);
  }
  return m;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row counts differ");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack: column counts differ");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  m.set_block(0, 0, a);
  m.set_block(a.rows_, 0, b);
  return m;
}

Matrix Matrix::block_diagonal(std::span<const Matrix> blocks) {
  std::size_t nr = 0;
  std::size_t nc = 0;
  for (const auto& b : blocks) {
    nr += b.rows_;
    nc += b.cols_;
  }
  Matrix m(nr, nc);
  std::size_t r = 0;
  std::size_t c = 0;
  for (const auto& b : blocks) {
    m.set_block(r, c, b);
    r += b.rows_;
    c += b.cols_;
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& a) {
  for (auto& s : data_) s *= a;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
  Matrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) p(i, j) += aik * b(k, j);
      }
    }
  }
  return p;
}

std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> x) {
  if (a.cols_ != x.size()) throw DimensionError("matrix-vector product: size mismatch");
  std::vector<Scalar> y(a.rows_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k)
      if (!a(i, k).is_zero() && !x[k].is_zero()) y[i] += a(i, k) * x[k];
  return y;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Scalar determinant(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("determinant of a non-square matrix");
  Matrix m = a;
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return Scalar();
    if (p != c) {
      for (std::size_t k = c; k < n; ++k) std::swap(m(p, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

}  // namespace mpinv
