#pragma once

#include <cstddef>
#include <span>

#include "mpinv/matrix.hpp"
#include "mpinv/sparse_vector.hpp"

namespace mpinv {

/// Coordinate matrix G of an inner product, G(i,j) = g(e_i, e_j), on a
/// space of dimension dim(). The constructor certifies conjugate symmetry and
/// positive definiteness (Sylvester: every leading principal minor is a
/// positive real).
class GramForm {
 public:
  explicit GramForm(Matrix entries);
  static GramForm identity(std::size_t dim);

  std::size_t dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  bool is_identity() const { return identity_; }

 private:
  struct Trusted {};
  GramForm(Matrix entries, Trusted);

  Matrix entries_;
  bool identity_ = false;
};

/// g(v, w) = sum_ij v_i * conj(w_j) * G(i,j): linear in v, conjugate-linear in w.
Scalar inner_product(const SparseVector& v, const SparseVector& w, const GramForm& g);
/// Standard inner product of the orthonormal basis v_1, v_2, ... (unbounded).
Scalar inner_product(const SparseVector& v, const SparseVector& w);
/// Dense coordinates of length g.dim().
Scalar inner_product(std::span<const Scalar> v, std::span<const Scalar> w, const GramForm& g);

/// g(v, v); the square of the norm, kept exact.
Rational norm_squared(const SparseVector& v, const GramForm& g);
Rational norm_squared(const SparseVector& v);
Rational norm_squared(std::span<const Scalar> v, const GramForm& g);

}  // namespace mpinv
