#include "mpinv/linalg.hpp"

#include <utility>

#include "mpinv/error.hpp"

namespace mpinv {

RowEchelon rref(const Matrix& a) {
  Matrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t k = c; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    }
    const Scalar inv = Scalar(1) / m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        if (!m(row, k).is_zero()) m(r, k) -= factor * m(row, k);
      }
    }
    pivots.push_back(c);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& a) { return rref(a).pivots.size(); }

Subspace kernel_basis(const Matrix& a) {
  const auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  Matrix basis(a.cols(), a.cols() - pivots.size());
  std::size_t k = 0;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    basis(free, k) = Scalar(1);
    for (std::size_t j = 0; j < pivots.size(); ++j) basis(pivots[j], k) = -r(j, free);
    ++k;
  }
  return Subspace::from_basis(std::move(basis));
}

Subspace image_basis(const Matrix& a) {
  const auto pivots = rref(a).pivots;
  return Subspace::from_basis(a.select_columns(pivots));
}

Matrix inverse(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  const auto [r, pivots] = rref(Matrix::hstack(a, Matrix::identity(n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw Error("matrix is singular");
  }
  return r.block(0, n, n, n);
}

Matrix coordinates_in(const Matrix& basis, const Matrix& targets) {
  if (basis.rows() != targets.rows()) throw DimensionError("coordinates_in: ambient sizes differ");
  const std::size_t k = basis.cols();
  const auto [r, pivots] = rref(Matrix::hstack(basis, targets));
  for (std::size_t j = 0; j < pivots.size(); ++j) {
    if (pivots[j] >= k) throw ContainmentError("vector is not in the span of the basis");
    if (pivots[j] != j) throw DimensionError("coordinates_in: basis is linearly dependent");
  }
  if (pivots.size() < k) throw DimensionError("coordinates_in: basis is linearly dependent");
  return r.block(0, k, k, targets.cols());
}

Matrix gram_pairing(const Matrix& y, const Matrix& x, const GramForm& g) {
  Matrix p(y.cols(), x.cols());
  std::vector<std::vector<Scalar>> xs;
  xs.reserve(x.cols());
  for (std::size_t l = 0; l < x.cols(); ++l) xs.push_back(x.column(l));
  for (std::size_t k = 0; k < y.cols(); ++k) {
    const auto yk = y.column(k);
    for (std::size_t l = 0; l < x.cols(); ++l) p(k, l) = inner_product(xs[l], yk, g);
  }
  return p;
}

bool are_orthogonal(const Subspace& a, const Subspace& b, const GramForm& g) {
  return gram_pairing(b.basis(), a.basis(), g).is_zero();
}

Subspace orthogonal_complement(const Subspace& u, const Subspace& h, const GramForm& g) {
  if (u.ambient_dim() != h.ambient_dim() || h.ambient_dim() != g.dim()) {
    throw DimensionError("orthogonal_complement: ambient dimensions differ");
  }
  if (!h.contains(u)) throw ContainmentError("orthogonal_complement: U is not contained in H");
  const Matrix coeffs = kernel_basis(gram_pairing(u.basis(), h.basis(), g)).basis();
  return Subspace::from_basis(h.basis() * coeffs);
}

Subspace orthogonal_complement(const Subspace& u, const GramForm& g) {
  return orthogonal_complement(u, Subspace::whole(u.ambient_dim()), g);
}

Matrix adjoint(const Matrix& a, const GramForm& gv, const GramForm& gw) {
  if (gv.dim() != a.cols() || gw.dim() != a.rows()) {
    throw DimensionError("adjoint: Gram dimensions do not match the matrix");
  }
  Matrix ah = a.adjoint_standard();
  if (gv.is_identity() && gw.is_identity()) return ah;
  // From g(x, y) = x^T G conj(y): A* = conj(Gv)^-1 A^H conj(Gw).
  Matrix out = std::move(ah);
  if (!gw.is_identity()) out = out * gw.matrix().conjugate();
  if (!gv.is_identity()) out = inverse(gv.matrix().conjugate()) * out;
  return out;
}

std::optional<FullRankFactorization> full_rank_factorization(const Matrix& a) {
  const auto [r, pivots] = rref(a);
  if (pivots.empty()) return std::nullopt;
  return FullRankFactorization{a.select_columns(pivots), r.block(0, 0, pivots.size(), a.cols())};
}

Matrix mp_inverse(const Matrix& a) {
  const auto frf = full_rank_factorization(a);
  if (!frf) return Matrix::zero(a.cols(), a.rows());
  const Matrix fh = frf->f.adjoint_standard();
  const Matrix gh = frf->g.adjoint_standard();
  return gh * inverse(frf->g * gh) * inverse(fh * frf->f) * fh;
}

Matrix mp_inverse_geometric(const Matrix& a, const GramForm& gv, const GramForm& gw) {
  if (gv.dim() != a.cols() || gw.dim() != a.rows()) {
    throw DimensionError("mp_inverse_geometric: Gram dimensions do not match the matrix");
  }
  const Matrix ker_perp = orthogonal_complement(kernel_basis(a), gv).basis();
  const Matrix im_perp = orthogonal_complement(image_basis(a), gw).basis();
  // A maps ker_perp isomorphically onto Im A, so [A ker_perp | im_perp] is a
  // basis of the codomain. X sends the first block back and kills the second.
  const Matrix codomain_basis = Matrix::hstack(a * ker_perp, im_perp);
  const Matrix targets = Matrix::hstack(ker_perp, Matrix::zero(a.cols(), im_perp.cols()));
  return targets * inverse(codomain_basis);
}

PenroseReport verify_penrose(const Matrix& a, const Matrix& x, const GramForm& gv,
                             const GramForm& gw) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("verify_penrose: X must have the transposed shape of A");
  }
  if (gv.dim() != a.cols() || gw.dim() != a.rows()) {
    throw DimensionError("verify_penrose: Gram dimensions do not match the matrix");
  }
  const Matrix ax = a * x;
  const Matrix xa = x * a;
  PenroseReport rep;
  rep.axa = ax * a == a;
  rep.xax = xa * x == x;
  rep.ax_selfadjoint = adjoint(ax, gw, gw) == ax;
  rep.xa_selfadjoint = adjoint(xa, gv, gv) == xa;
  return rep;
}

PenroseReport verify_penrose(const Matrix& a, const Matrix& x) {
  if (a.rows() == 0 || a.cols() == 0) {
    // Maps to or from the zero space: only the zero map exists on each side.
    if (x.rows() != a.cols() || x.cols() != a.rows()) {
      throw DimensionError("verify_penrose: X must have the transposed shape of A");
    }
    return {true, true, true, true};
  }
  return verify_penrose(a, x, GramForm::identity(a.cols()), GramForm::identity(a.rows()));
}

bool verify_reflexive(const Matrix& a, const Matrix& x) {
  if (x.rows() != a.cols() || x.cols() != a.rows()) {
    throw DimensionError("verify_reflexive: X must have the transposed shape of A");
  }
  return a * x * a == a && x * a * x == x;
}

}  // namespace mpinv
