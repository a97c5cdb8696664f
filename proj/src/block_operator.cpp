#include "mpinv/block_operator.hpp"

#include <map>

#include "mpinv/error.hpp"
#include "mpinv/gram_form.hpp"
#include "mpinv/linalg.hpp"

namespace mpinv {

BlockOperator::BlockOperator(std::vector<Matrix> head_blocks, Matrix tail_block)
    : head_(std::move(head_blocks)), tail_(std::move(tail_block)) {
  for (const auto& b : head_) {
    if (!b.is_square() || b.rows() == 0) throw DimensionError("head blocks must be non-empty and square");
    head_offsets_.push_back(head_dim_);
    head_dim_ += b.rows();
  }
  if (!tail_.is_square() || tail_.rows() == 0) {
    throw DimensionError("tail block must be non-empty and square");
  }
}

BlockOperator BlockOperator::identity(std::vector<std::size_t> head_sizes, std::size_t tail_size) {
  std::vector<Matrix> head;
  for (std::size_t s : head_sizes) head.push_back(Matrix::identity(s));
  return {std::move(head), Matrix::identity(tail_size)};
}

BlockOperator BlockOperator::zero(std::vector<std::size_t> head_sizes, std::size_t tail_size) {
  std::vector<Matrix> head;
  for (std::size_t s : head_sizes) head.push_back(Matrix::zero(s, s));
  return {std::move(head), Matrix::zero(tail_size, tail_size)};
}

std::vector<std::size_t> BlockOperator::head_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& b : head_) sizes.push_back(b.rows());
  return sizes;
}

std::size_t BlockOperator::block_of(std::size_t index) const {
  if (index == 0) throw DimensionError("coordinates start at 1");
  const std::size_t zero_based = index - 1;
  if (zero_based >= head_dim_) return head_.size() + (zero_based - head_dim_) / tail_size();
  std::size_t block = 0;
  while (block + 1 < head_.size() && head_offsets_[block + 1] <= zero_based) ++block;
  return block;
}

std::size_t BlockOperator::block_offset(std::size_t block) const {
  if (block < head_.size()) return head_offsets_[block];
  return head_dim_ + (block - head_.size()) * tail_size();
}

std::size_t BlockOperator::block_size(std::size_t block) const {
  return block < head_.size() ? head_[block].rows() : tail_size();
}

const Matrix& BlockOperator::block_matrix(std::size_t block) const {
  return block < head_.size() ? head_[block] : tail_;
}

bool BlockOperator::same_geometry(const BlockOperator& other) const {
  return head_sizes() == other.head_sizes() && tail_size() == other.tail_size();
}

SparseVector apply(const BlockOperator& op, const SparseVector& x) {
  std::map<std::size_t, std::vector<SparseVector::Entry>> by_block;
  for (const auto& e : x.entries()) by_block[op.block_of(e.first)].push_back(e);

  std::vector<SparseVector::Entry> out;
  for (const auto& [block, entries] : by_block) {
    const std::size_t offset = op.block_offset(block);
    const std::size_t size = op.block_size(block);
    std::vector<Scalar> local(size);
    for (const auto& [index, value] : entries) local[index - 1 - offset] = value;
    const auto image = op.block_matrix(block) * std::span<const Scalar>(local);
    for (std::size_t k = 0; k < size; ++k) {
      if (!image[k].is_zero()) out.emplace_back(offset + k + 1, image[k]);
    }
  }
  return SparseVector(std::move(out));
}

BlockOperator mp_inverse(const BlockOperator& op) {
  std::vector<Matrix> head;
  head.reserve(op.head_blocks().size());
  for (const auto& b : op.head_blocks()) head.push_back(mp_inverse(b));
  return {std::move(head), mp_inverse(op.tail_block())};
}

BlockOperator compose(const BlockOperator& a, const BlockOperator& b) {
  if (!a.same_geometry(b)) throw GeometryError("compose: block geometries differ");
  std::vector<Matrix> head;
  for (std::size_t j = 0; j < a.head_blocks().size(); ++j) {
    head.push_back(a.head_blocks()[j] * b.head_blocks()[j]);
  }
  return {std::move(head), a.tail_block() * b.tail_block()};
}

Matrix truncate(const BlockOperator& op, std::size_t tail_copies) {
  std::vector<Matrix> blocks = op.head_blocks();
  for (std::size_t k = 0; k < tail_copies; ++k) blocks.push_back(op.tail_block());
  return Matrix::block_diagonal(blocks);
}

bool is_finite_potent(const BlockOperator& op) {
  const Matrix& t = op.tail_block();
  Matrix power = t;
  for (std::size_t k = 1; k < t.rows(); ++k) power = power * t;
  return power.is_zero();
}

std::vector<SparseVector> BlockSubspaces::head_vectors() const {
  std::vector<SparseVector> out;
  std::size_t offset = 0;
  for (const auto& part : head) {
    for (std::size_t c = 0; c < part.dim(); ++c) {
      out.push_back(SparseVector::from_dense(part.basis().column(c), offset));
    }
    offset += part.ambient_dim();
  }
  return out;
}

std::vector<SparseVector> BlockSubspaces::tail_vectors(std::size_t copy) const {
  std::vector<SparseVector> out;
  const std::size_t offset = head_dim + copy * tail.ambient_dim();
  for (std::size_t c = 0; c < tail.dim(); ++c) {
    out.push_back(SparseVector::from_dense(tail.basis().column(c), offset));
  }
  return out;
}

namespace {

template <typename Fn>
BlockSubspaces describe(const BlockOperator& op, Fn per_block) {
  BlockSubspaces d;
  for (const auto& b : op.head_blocks()) d.head.push_back(per_block(b));
  d.tail = per_block(op.tail_block());
  d.head_dim = op.head_dim();
  return d;
}

}  // namespace

BlockSubspaces kernel_description(const BlockOperator& op) {
  return describe(op, [](const Matrix& b) { return kernel_basis(b); });
}

BlockSubspaces image_description(const BlockOperator& op) {
  return describe(op, [](const Matrix& b) { return image_basis(b); });
}

BlockSubspaces complement_description(const BlockSubspaces& d) {
  BlockSubspaces out;
  for (const auto& s : d.head) {
    out.head.push_back(orthogonal_complement(s, GramForm::identity(s.ambient_dim())));
  }
  out.tail = orthogonal_complement(d.tail, GramForm::identity(d.tail.ambient_dim()));
  out.head_dim = d.head_dim;
  return out;
}

}  // namespace mpinv
