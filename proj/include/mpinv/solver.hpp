#pragma once

#include "mpinv/block_operator.hpp"
#include "mpinv/scalar.hpp"
#include "mpinv/sparse_vector.hpp"

namespace mpinv {

/// Outcome of solving op(x) = w for a finitely supported w.
struct SolveReport {
  bool consistent = false;
  /// op^dagger(w): the least-squares minimizer of smallest norm.
  SparseVector min_solution;
  /// ||op(min_solution) - w||^2; zero exactly when consistent.
  Rational residual_norm_sq;
  /// Ker op, block by block; solutions of a consistent system are
  /// min_solution + Ker op.
  BlockSubspaces kernel;
};

/// w is in Im op, decided by (op o op^dagger)(w) == w.
bool is_consistent(const BlockOperator& op, const SparseVector& w);

SparseVector min_least_norm_solution(const BlockOperator& op, const SparseVector& w);

/// ||op(x) - w||^2 under the standard orthonormal inner product.
Rational residual_norm_squared(const BlockOperator& op, const SparseVector& x,
                               const SparseVector& w);

SolveReport solve(const BlockOperator& op, const SparseVector& w);

}  // namespace mpinv
