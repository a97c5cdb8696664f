#include "mpinv/subspace.hpp"

#include <string>

#include "mpinv/error.hpp"
#include "mpinv/linalg.hpp"

namespace mpinv {

Subspace Subspace::whole(std::size_t ambient_dim) {
  return Subspace(Matrix::identity(ambient_dim), 0);
}

Subspace Subspace::from_basis(Matrix basis) {
  if (rank(basis) != basis.cols()) throw DimensionError("subspace basis is linearly dependent");
  return Subspace(std::move(basis), 0);
}

Subspace Subspace::span(const Matrix& generators) { return image_basis(generators); }

Subspace Subspace::span(std::size_t ambient_dim, std::span<const SparseVector> generators) {
  Matrix m(ambient_dim, generators.size());
  for (std::size_t c = 0; c < generators.size(); ++c) {
    if (generators[c].max_index() > ambient_dim) {
      throw DimensionError("vector index " + std::to_string(generators[c].max_index()) +
                           " exceeds ambient dimension " + std::to_string(ambient_dim));
    }
    m.set_column(c, generators[c].to_dense(ambient_dim));
  }
  return span(m);
}

std::vector<SparseVector> Subspace::vectors() const {
  std::vector<SparseVector> out;
  out.reserve(dim());
  for (std::size_t c = 0; c < dim(); ++c) out.push_back(SparseVector::from_dense(basis_.column(c)));
  return out;
}

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_dim()) throw DimensionError("subspace ambient dimensions differ");
  if (vectors.cols() == 0 || vectors.is_zero()) return true;
  return rank(Matrix::hstack(basis_, vectors)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return contains(other.basis_); }

bool Subspace::contains(std::span<const Scalar> vector) const {
  return contains(Matrix::from_columns(vector.size(), {{vector.begin(), vector.end()}}));
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  return span(Matrix::hstack(a.basis_, b.basis_));
}

}  // namespace mpinv
