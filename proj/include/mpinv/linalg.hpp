#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "mpinv/gram_form.hpp"
#include "mpinv/matrix.hpp"
#include "mpinv/subspace.hpp"

namespace mpinv {

struct RowEchelon {
  Matrix reduced;
  /// 0-based pivot columns, increasing.
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination; the pivot of each column is its first
/// nonzero entry at or below the current row.
RowEchelon rref(const Matrix& a);
std::size_t rank(const Matrix& a);

/// {x : A x = 0}, in k^cols.
Subspace kernel_basis(const Matrix& a);
/// Column space, in k^rows, spanned by the pivot columns of A.
Subspace image_basis(const Matrix& a);

/// Inverse of a nonsingular square matrix; throws Error when singular.
Matrix inverse(const Matrix& a);

/// Coordinates C with basis * C = targets, for a basis of independent
/// columns. Throws ContainmentError when some target is outside the span.
Matrix coordinates_in(const Matrix& basis, const Matrix& targets);

/// P(k, l) = g(x_l, y_k) for the columns x_l of X and y_k of Y. Its kernel
/// describes the combinations of X orthogonal to all of Y.
Matrix gram_pairing(const Matrix& y, const Matrix& x, const GramForm& g);

/// True when g(a, b) = 0 for all a in A, b in B.
bool are_orthogonal(const Subspace& a, const Subspace& b, const GramForm& g);

/// [U]^perp relative to H: {v in H : g(u, v) = 0 for all u in U}.
/// Throws ContainmentError unless U is inside H.
Subspace orthogonal_complement(const Subspace& u, const Subspace& h, const GramForm& g);
/// Complement inside the whole ambient space.
Subspace orthogonal_complement(const Subspace& u, const GramForm& g);

/// A* with g_v(A* w, v) = g_w(w, A v); for identity forms this is A^H.
Matrix adjoint(const Matrix& a, const GramForm& gv, const GramForm& gw);

struct FullRankFactorization {
  Matrix f;  // rows x r, the pivot columns of A
  Matrix g;  // r x cols, the nonzero rows of rref(A)
};

/// A = F G with r = rank(A); std::nullopt for the zero matrix.
std::optional<FullRankFactorization> full_rank_factorization(const Matrix& a);

/// Moore-Penrose inverse for the standard inner products, via
/// G^H (G G^H)^-1 (F^H F)^-1 F^H. The zero map inverts to the zero map.
Matrix mp_inverse(const Matrix& a);

/// Moore-Penrose inverse relative to arbitrary inner products on the domain
/// (gv, dimension cols) and codomain (gw, dimension rows). Inverts the
/// restriction [Ker A]^perp -> Im A and sends [Im A]^perp to zero.
Matrix mp_inverse_geometric(const Matrix& a, const GramForm& gv, const GramForm& gw);

struct PenroseReport {
  bool axa = false;          // A X A = A
  bool xax = false;          // X A X = X
  bool ax_selfadjoint = false;  // (A X)* = A X
  bool xa_selfadjoint = false;  // (X A)* = X A

  bool reflexive() const { return axa && xax; }
  bool all() const { return axa && xax && ax_selfadjoint && xa_selfadjoint; }
  std::array<bool, 4> as_array() const { return {axa, xax, ax_selfadjoint, xa_selfadjoint}; }
};

PenroseReport verify_penrose(const Matrix& a, const Matrix& x, const GramForm& gv,
                             const GramForm& gw);
PenroseReport verify_penrose(const Matrix& a, const Matrix& x);

/// A X A = A and X A X = X.
bool verify_reflexive(const Matrix& a, const Matrix& x);

}  // namespace mpinv
