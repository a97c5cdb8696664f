#pragma once

#include <cstddef>
#include <vector>

#include "mpinv/gram_form.hpp"
#include "mpinv/linalg.hpp"
#include "mpinv/matrix.hpp"
#include "mpinv/subspace.hpp"

namespace mpinv {

/// E = H_1 (+) ... (+) H_n, given by one basis per part. The constructor
/// checks that the parts form a direct sum of the whole ambient space;
/// invariance under a particular map is checked separately.
class InvariantDecomposition {
 public:
  explicit InvariantDecomposition(std::vector<Subspace> parts);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t size() const { return parts_.size(); }
  const std::vector<Subspace>& parts() const { return parts_; }
  const Subspace& part(std::size_t i) const { return parts_[i]; }

  /// [basis(H_1) | ... | basis(H_n)], an invertible change of basis.
  const Matrix& concatenated_basis() const { return concatenated_; }

 private:
  std::size_t ambient_dim_ = 0;
  std::vector<Subspace> parts_;
  Matrix concatenated_;
};

/// True iff A h lies in H_i for every basis vector h of every part H_i.
bool check_invariance(const Matrix& a, const InvariantDecomposition& d);

/// Matrix of f restricted to H_i, in the coordinates of the part's basis.
Matrix restriction(const Matrix& a, const Subspace& part);

/// The inner product induced on a part: G_i(k, l) = g(h_k, h_l).
GramForm restricted_gram(const Subspace& part, const GramForm& g);

/// The reflexive generalized inverse that acts as (f|H_i)^dagger on each
/// part, each taken with respect to the induced inner product.
Matrix blockwise_rgi(const Matrix& a, const InvariantDecomposition& d, const GramForm& g);

struct CharConditions {
  /// [Im f_i]_i^perp is orthogonal to the sum of the other Im f_j, all i.
  bool image_condition = false;
  /// Same with kernels.
  bool kernel_condition = false;
  bool both() const { return image_condition && kernel_condition; }
};

CharConditions char_conditions(const Matrix& a, const InvariantDecomposition& d, const GramForm& g);

struct DecompositionComplements {
  Subspace image_complement;   // (+)_i [Im f_i]_i^perp
  Subspace kernel_complement;  // (+)_i [Ker f_i]_i^perp
};

/// Builds both direct sums and asserts E = Im f (+) image_complement and
/// E = Ker f (+) kernel_complement.
DecompositionComplements decomposition_complements(const Matrix& a,
                                                   const InvariantDecomposition& d,
                                                   const GramForm& g);

/// Per-part images Im f_i and kernels Ker f_i as subspaces of E.
std::vector<Subspace> part_images(const Matrix& a, const InvariantDecomposition& d);
std::vector<Subspace> part_kernels(const Matrix& a, const InvariantDecomposition& d);

}  // namespace mpinv
