#pragma once

#include <cstddef>
#include <vector>

#include "mpinv/matrix.hpp"
#include "mpinv/sparse_vector.hpp"
#include "mpinv/subspace.hpp"

namespace mpinv {

/// Block-diagonal endomorphism of the space with orthonormal basis v_1, v_2, ...
/// Head block j acts on the coordinates following those of blocks 0..j-1;
/// after the head, the tail block acts on every successive run of
/// tail_size() coordinates, forever.
class BlockOperator {
 public:
  BlockOperator(std::vector<Matrix> head_blocks, Matrix tail_block);

  /// Every block is the identity of its size.
  static BlockOperator identity(std::vector<std::size_t> head_sizes, std::size_t tail_size);
  static BlockOperator zero(std::vector<std::size_t> head_sizes, std::size_t tail_size);

  const std::vector<Matrix>& head_blocks() const { return head_; }
  const Matrix& tail_block() const { return tail_; }

  std::size_t head_dim() const { return head_dim_; }
  std::size_t tail_size() const { return tail_.rows(); }
  std::vector<std::size_t> head_sizes() const;

  /// Block number (head blocks first, then tail copies 0, 1, ...) that owns
  /// the 1-based coordinate `index`.
  std::size_t block_of(std::size_t index) const;
  /// 0-based offset of the first coordinate of block `block`.
  std::size_t block_offset(std::size_t block) const;
  std::size_t block_size(std::size_t block) const;
  const Matrix& block_matrix(std::size_t block) const;

  bool same_geometry(const BlockOperator& other) const;

  friend bool operator==(const BlockOperator&, const BlockOperator&) = default;

 private:
  std::vector<Matrix> head_;
  Matrix tail_;
  std::vector<std::size_t> head_offsets_;
  std::size_t head_dim_ = 0;
};

SparseVector apply(const BlockOperator& op, const SparseVector& x);

/// Blockwise Moore-Penrose inverse. Blocks live on mutually orthogonal
/// coordinate ranges, so this is the Moore-Penrose inverse of the operator.
BlockOperator mp_inverse(const BlockOperator& op);

/// a o b, blockwise; throws GeometryError unless both share block geometry.
BlockOperator compose(const BlockOperator& a, const BlockOperator& b);

/// Dense matrix of the head plus the first `tail_copies` tail blocks.
Matrix truncate(const BlockOperator& op, std::size_t tail_copies);

/// True iff the tail block is nilpotent (tail^t = 0 for t = tail size).
bool is_finite_potent(const BlockOperator& op);

/// Per-block subspaces: one for each head block (in block coordinates) and
/// one pattern that repeats inside every tail copy.
struct BlockSubspaces {
  std::vector<Subspace> head;
  Subspace tail;
  std::size_t head_dim = 0;

  /// Absolute basis vectors of the head parts.
  std::vector<SparseVector> head_vectors() const;
  /// Absolute basis vectors of the tail pattern inside tail copy `copy`
  /// (copy 0 starts right after the head).
  std::vector<SparseVector> tail_vectors(std::size_t copy) const;
};

BlockSubspaces kernel_description(const BlockOperator& op);
BlockSubspaces image_description(const BlockOperator& op);
/// Blockwise orthogonal complements (standard inner product) of a description.
BlockSubspaces complement_description(const BlockSubspaces& d);

}  // namespace mpinv
