#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mpinv/matrix.hpp"
#include "mpinv/sparse_vector.hpp"

namespace mpinv {

/// Subspace of k^n held by a basis: the columns of an n x dim matrix, always
/// linearly independent. Bases are not canonicalized; compare subspaces with
/// contains() / operator==, which test mutual containment by rank.
class Subspace {
 public:
  /// The zero subspace of k^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0) : basis_(ambient_dim, 0) {}

  static Subspace whole(std::size_t ambient_dim);
  /// Columns must be independent; throws DimensionError otherwise.
  static Subspace from_basis(Matrix basis);
  /// Span of arbitrary generators (dependent columns are dropped).
  static Subspace span(const Matrix& generators);
  static Subspace span(std::size_t ambient_dim, std::span<const SparseVector> generators);

  std::size_t ambient_dim() const { return basis_.rows(); }
  std::size_t dim() const { return basis_.cols(); }
  bool is_zero() const { return dim() == 0; }
  const Matrix& basis() const { return basis_; }
  std::vector<SparseVector> vectors() const;

  bool contains(const Subspace& other) const;
  /// True when every column of `vectors` lies in this subspace.
  bool contains(const Matrix& vectors) const;
  bool contains(std::span<const Scalar> vector) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.dim() == b.dim() && a.ambient_dim() == b.ambient_dim() && a.contains(b);
  }

  /// a + b.
  static Subspace sum(const Subspace& a, const Subspace& b);

 private:
  explicit Subspace(Matrix basis, int) : basis_(std::move(basis)) {}
  Matrix basis_;
};

}  // namespace mpinv
