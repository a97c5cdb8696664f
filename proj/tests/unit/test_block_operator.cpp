#include "doctest.h"
#include "mpinv/block_operator.hpp"
#include "mpinv/error.hpp"
#include "mpinv/linalg.hpp"
#include "support/fixtures.hpp"
#include "support/random.hpp"

using namespace mpinv;
using mpinv::testing::e;
using mpinv::testing::phi;

namespace {

Subspace units(std::size_t n, std::initializer_list<std::size_t> indices) {
  std::vector<SparseVector> vs;
  for (std::size_t i : indices) vs.push_back(e(i));
  return Subspace::span(n, vs);
}

SparseVector dense_to_sparse(const std::vector<Scalar>& v) { return SparseVector::from_dense(v); }

}  // namespace

TEST_CASE("geometry of phi") {
  const BlockOperator op = phi();
  CHECK(op.head_dim() == 10);
  CHECK(op.tail_size() == 5);
  CHECK(op.head_sizes() == std::vector<std::size_t>{10});
  CHECK(op.block_of(1) == 0);
  CHECK(op.block_of(10) == 0);
  CHECK(op.block_of(11) == 1);
  CHECK(op.block_of(15) == 1);
  CHECK(op.block_of(16) == 2);
  CHECK(op.block_offset(0) == 0);
  CHECK(op.block_offset(1) == 10);
  CHECK(op.block_offset(3) == 20);
  CHECK(op.block_size(0) == 10);
  CHECK(op.block_size(7) == 5);
  CHECK(op.block_matrix(4) == mpinv::testing::phi_tail());
  CHECK_THROWS_AS(op.block_of(0), DimensionError);
}

TEST_CASE("block operator construction errors") {
  CHECK_THROWS_AS(BlockOperator({Matrix{{1, 2}}}, Matrix::identity(1)), DimensionError);
  CHECK_THROWS_AS(BlockOperator({Matrix()}, Matrix::identity(1)), DimensionError);
  CHECK_THROWS_AS(BlockOperator({}, Matrix()), DimensionError);
  CHECK_NOTHROW(BlockOperator({}, Matrix::identity(1)));
}

TEST_CASE("apply phi") {
  const BlockOperator op = phi();
  CHECK(apply(op, e(1)) == e(2) + e(5) + e(7));
  CHECK(apply(op, e(3)) == e(4));
  CHECK(apply(op, e(8)) == Scalar(2) * e(9) - e(6));
  CHECK(apply(op, e(12)).empty());
  CHECK(apply(op, e(11)) == Scalar(3) * e(12));
  CHECK(apply(op, e(1001)) == Scalar(3) * e(1002));
  CHECK(apply(op, SparseVector()).empty());
}

TEST_CASE("Moore-Penrose inverse of phi") {
  const BlockOperator inv = mp_inverse(phi());
  Matrix expected = mpinv::testing::phi_pinv_head_published();
  for (std::size_t c = 0; c < 10; ++c) expected(6, c) = Scalar();
  REQUIRE(inv.head_blocks().size() == 1);
  CHECK(inv.head_blocks()[0] == expected);
  CHECK(inv.tail_block() == mpinv::testing::phi_pinv_tail_published());
  CHECK(apply(inv, e(2)) == Scalar(-2) * e(1) + e(2) - e(4) + e(5));
  CHECK(mp_inverse(inv) == phi());
}

TEST_CASE("finite potency") {
  CHECK(is_finite_potent(phi()));
  CHECK_FALSE(is_finite_potent(mp_inverse(phi())));
  CHECK(is_finite_potent(BlockOperator::zero({2}, 3)));
  CHECK_FALSE(is_finite_potent(BlockOperator::identity({}, 1)));
  // Head blocks never matter.
  CHECK(is_finite_potent(BlockOperator({Matrix::identity(4)}, Matrix{{0, 1}, {0, 0}})));
}

TEST_CASE("truncation") {
  const BlockOperator op = phi();
  CHECK(truncate(op, 0) == mpinv::testing::phi_head());
  const Matrix t2 = truncate(op, 2);
  CHECK(t2.rows() == 20);
  CHECK(t2.block(10, 10, 5, 5) == mpinv::testing::phi_tail());
  CHECK(t2.block(15, 15, 5, 5) == mpinv::testing::phi_tail());
  CHECK(t2.block(10, 15, 5, 5).is_zero());
  CHECK(t2.block(0, 10, 10, 10).is_zero());
  CHECK(truncate(BlockOperator({}, Matrix{{2}}), 0) == Matrix());
}

TEST_CASE("compose") {
  const BlockOperator op = phi();
  CHECK(compose(op, BlockOperator::identity({10}, 5)) == op);
  CHECK(compose(BlockOperator::zero({10}, 5), op) == BlockOperator::zero({10}, 5));
  CHECK_THROWS_AS(compose(op, BlockOperator::identity({10}, 4)), GeometryError);
  CHECK_THROWS_AS(compose(op, BlockOperator::identity({5, 5}, 5)), GeometryError);
  CHECK_THROWS_AS(compose(op, BlockOperator::identity({}, 5)), GeometryError);
  CHECK(op.same_geometry(mp_inverse(op)));
  CHECK_FALSE(op.same_geometry(BlockOperator::identity({9}, 5)));
}

TEST_CASE("kernel, image and complement descriptions of phi") {
  const BlockOperator op = phi();
  const BlockSubspaces ker = kernel_description(op);
  REQUIRE(ker.head.size() == 1);
  CHECK(ker.head[0] == units(10, {7}));
  CHECK(ker.tail == units(5, {2}));
  CHECK(ker.head_dim == 10);
  CHECK(ker.head_vectors() == std::vector<SparseVector>{e(7)});
  CHECK(ker.tail_vectors(0) == std::vector<SparseVector>{e(12)});
  CHECK(ker.tail_vectors(3) == std::vector<SparseVector>{e(27)});

  const BlockSubspaces im = image_description(op);
  CHECK(im.head[0].dim() == 9);
  CHECK(im.tail.dim() == 4);
  const BlockSubspaces im_perp = complement_description(im);
  CHECK(im_perp.tail == units(5, {3}));
  CHECK(im_perp.head[0].dim() == 1);

  const BlockSubspaces ker_perp = complement_description(ker);
  CHECK(ker_perp.tail == units(5, {1, 3, 4, 5}));
  // Im phi^dagger = [Ker phi]^perp.
  const BlockSubspaces inv_im = image_description(mp_inverse(op));
  CHECK(inv_im.head[0] == ker_perp.head[0]);
  CHECK(inv_im.tail == ker_perp.tail);
}

TEST_CASE("random block operators: inverse, truncation and application agree") {
  mpinv::testing::Random rnd(31337);
  for (int trial = 0; trial < 60; ++trial) {
    const BlockOperator op = rnd.block_operator();
    const BlockOperator inv = mp_inverse(op);
    CHECK(mp_inverse(inv) == op);
    CHECK(op.same_geometry(inv));
    for (std::size_t k = 0; k <= 3; ++k) {
      const Matrix t = truncate(op, k);
      CHECK(truncate(inv, k) == mp_inverse(t));
      CHECK(verify_penrose(t, truncate(inv, k)).all());
    }
    const std::size_t k = 2;
    const std::size_t dim = op.head_dim() + k * op.tail_size();
    const SparseVector x = rnd.sparse(dim, 4);
    const auto dense = x.to_dense(dim);
    CHECK(apply(op, x) == dense_to_sparse(truncate(op, k) * std::span<const Scalar>(dense)));

    const BlockSubspaces ker = kernel_description(op);
    for (const auto& v : ker.head_vectors()) CHECK(apply(op, v).empty());
    for (const auto& v : ker.tail_vectors(1)) CHECK(apply(op, v).empty());
    Matrix power = Matrix::identity(op.tail_size());
    for (std::size_t i = 0; i < op.tail_size(); ++i) power = power * op.tail_block();
    CHECK(is_finite_potent(op) == power.is_zero());
  }
}
