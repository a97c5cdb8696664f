#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mpinv/scalar.hpp"

namespace mpinv {

/// Dense row-major matrix of exact scalars. Indices are 0-based. Empty
/// shapes (0 rows or 0 columns) are allowed and act as the maps to or from
/// the zero space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Row-wise literal; all rows must have the same length.
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  /// Matrix whose columns are the given dense vectors of length `rows`.
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Scalar>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> values);
  std::vector<Scalar> row(std::size_t r) const;

  Matrix transpose() const;
  Matrix conjugate() const;
  /// Conjugate transpose A^H.
  Matrix adjoint_standard() const;

  /// Rows [r0, r0+nr) x columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix select_columns(std::span<const std::size_t> cols) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  /// Horizontal / vertical concatenation; row (column) counts must agree.
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix block_diagonal(std::span<const Matrix> blocks);

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& a);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& a, Matrix m) { return m *= a; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> x);

  friend bool operator==(const Matrix&, const Matrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact determinant by fraction-producing Gaussian elimination.
Scalar determinant(const Matrix& a);

}  // namespace mpinv
