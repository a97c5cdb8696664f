#pragma once

// Hand-transcribed operators shared by the unit and acceptance suites.

#include "mpinv/block_operator.hpp"
#include "mpinv/decomposition.hpp"
#include "mpinv/matrix.hpp"
#include "mpinv/sparse_vector.hpp"

namespace mpinv::testing {

inline Scalar q(long n, long d = 1) { return Scalar::fraction(n, d); }

/// f(v1) = f(v2) = v1, f(v3) = -2 v1, f(v4) = v1 + v2 + v3 on an orthonormal
/// basis of k^4 (columns are images).
inline Matrix counterexample_matrix() {
  return {{1, 1, -2, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 0}};
}

/// H1 = <v1, v2>, H2 = <v1 + v2 + v3, v4>.
inline InvariantDecomposition counterexample_decomposition() {
  return InvariantDecomposition({
      Subspace::from_basis(Matrix{{1, 0}, {0, 1}, {0, 0}, {0, 0}}),
      Subspace::from_basis(Matrix{{1, 0}, {1, 0}, {1, 0}, {0, 1}}),
  });
}

/// Blockwise inverse for the decomposition above: v1 -> (v1 + v2)/2,
/// v3 -> v4 - (v1 + v2)/2, v2, v4 -> 0.
inline Matrix counterexample_blockwise_rgi() {
  return {{q(1, 2), 0, q(-1, 2), 0}, {q(1, 2), 0, q(-1, 2), 0}, {0, 0, 0, 0}, {0, 0, 1, 0}};
}

/// Moore-Penrose inverse of the counterexample, column by column:
/// (1/6, 1/6, -1/3, 0), (-1/12, -1/12, 1/6, 1/2) twice, 0.
inline Matrix counterexample_mp_inverse() {
  return {{q(1, 6), q(-1, 12), q(-1, 12), 0},
          {q(1, 6), q(-1, 12), q(-1, 12), 0},
          {q(-1, 3), q(1, 6), q(1, 6), 0},
          {0, q(1, 2), q(1, 2), 0}};
}

/// 10x10 head of the finite potent operator phi on v1..v10.
inline Matrix phi_head() {
  return {{0, 1, 0, 1, 0, 0, 0, 0, 0, 0},  {1, 3, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, -1, -1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
          {1, 0, 0, 0, 2, 0, 0, 0, 0, 0},   {0, 0, 0, 0, 0, 0, 0, -1, 0, -1},
          {1, 0, 0, 0, 2, 3, 0, 0, 1, 5},   {0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 2, 0, 0},   {0, 0, 0, 0, 0, 0, 0, 0, 1, 0}};
}

/// 5x5 block repeated on v_{5h+1}..v_{5h+5}, h >= 2.
inline Matrix phi_tail() {
  return {{0, 0, -1, 0, -1}, {3, 0, 0, 1, 5}, {0, 0, 0, 0, 0}, {0, 0, 2, 0, 0}, {0, 0, 0, 1, 0}};
}

inline BlockOperator phi() { return BlockOperator({phi_head()}, phi_tail()); }

/// The published head of phi^dagger. Row 7 is wrong there: v7 spans part of
/// Ker phi, so every image of phi^dagger has a zero v7 coordinate.
inline Matrix phi_pinv_head_published() {
  return {{6, -2, 6, 0, 3, 0, 0, 0, 0, 0},
          {-2, 1, -2, 0, -1, 0, 0, 0, 0, 0},
          {0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
          {3, -1, 2, 0, 1, 0, 0, 0, 0, 0},
          {-3, 1, -3, 0, -1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, q(-1, 3), q(5, 3), q(1, 3), 0, q(5, 6), q(-1, 3)},
          {3, -1, 2, 0, -1, 0, 0, 0, 0, 0},
          {0, 0, 0, 0, 0, 0, 0, 0, q(1, 2), 0},
          {0, 0, 0, 0, 0, 0, 0, 0, 0, 1},
          {0, 0, 0, 0, 0, -1, 0, 0, q(-1, 2), 0}};
}

inline Matrix phi_pinv_tail_published() {
  return {{q(5, 3), q(1, 3), 0, q(5, 6), q(-1, 3)},
          {0, 0, 0, 0, 0},
          {0, 0, 0, q(1, 2), 0},
          {0, 0, 0, 0, 1},
          {-1, 0, 0, q(-1, 2), 0}};
}

inline SparseVector e(std::size_t i) { return SparseVector::unit(i); }

}  // namespace mpinv::testing
