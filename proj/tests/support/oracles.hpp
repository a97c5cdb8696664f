#pragma once

// Reference computations kept independent of the library's inversion paths.

#include "mpinv/matrix.hpp"

namespace mpinv::testing {

/// Greville's column-recursive pseudoinverse, A_k^+ built from A_{k-1}^+.
inline Matrix greville_pinv(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  auto column_pinv = [m](const Matrix& c) {
    // c is m x 1; c^+ = c^H / (c^H c), or zero.
    Scalar norm;
    for (std::size_t r = 0; r < m; ++r) norm += c(r, 0).conj() * c(r, 0);
    if (norm.is_zero()) return Matrix::zero(1, m);
    return (Scalar(1) / norm) * c.adjoint_standard();
  };
  Matrix ak = a.block(0, 0, m, 1);
  Matrix pinv = column_pinv(ak);
  for (std::size_t k = 1; k < n; ++k) {
    const Matrix col = a.block(0, k, m, 1);
    const Matrix d = pinv * col;
    const Matrix c = col - ak * d;
    Matrix b;
    if (!c.is_zero()) {
      b = column_pinv(c);
    } else {
      Scalar s(1);
      for (std::size_t r = 0; r < d.rows(); ++r) s += d(r, 0).conj() * d(r, 0);
      b = (Scalar(1) / s) * (d.adjoint_standard() * pinv);
    }
    pinv = Matrix::vstack(pinv - d * b, b);
    ak = Matrix::hstack(ak, col);
  }
  return pinv;
}

}  // namespace mpinv::testing
