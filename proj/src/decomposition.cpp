#include "mpinv/decomposition.hpp"

#include "mpinv/error.hpp"

namespace mpinv {

InvariantDecomposition::InvariantDecomposition(std::vector<Subspace> parts)
    : parts_(std::move(parts)) {
  if (parts_.empty()) throw DecompositionError("decomposition has no parts");
  ambient_dim_ = parts_.front().ambient_dim();
  concatenated_ = Matrix(ambient_dim_, 0);
  for (const auto& p : parts_) {
    if (p.ambient_dim() != ambient_dim_) {
      throw DecompositionError("decomposition parts live in different ambient spaces");
    }
    if (p.is_zero()) throw DecompositionError("decomposition part is the zero subspace");
    concatenated_ = Matrix::hstack(concatenated_, p.basis());
  }
  if (concatenated_.cols() != ambient_dim_ || rank(concatenated_) != ambient_dim_) {
    throw DecompositionError("parts do not form a direct sum of the ambient space");
  }
}

namespace {

void require_square(const Matrix& a, const InvariantDecomposition& d) {
  if (!a.is_square() || a.rows() != d.ambient_dim()) {
    throw DimensionError("decomposition dimension differs from the endomorphism");
  }
}

void require_invariant(const Matrix& a, const InvariantDecomposition& d) {
  if (!check_invariance(a, d)) throw DecompositionError("decomposition is not invariant");
}

// Sum of all parts except `skip`.
Subspace sum_except(const std::vector<Subspace>& spaces, std::size_t skip) {
  Matrix gens(spaces.front().ambient_dim(), 0);
  for (std::size_t j = 0; j < spaces.size(); ++j) {
    if (j != skip) gens = Matrix::hstack(gens, spaces[j].basis());
  }
  return Subspace::span(gens);
}

Subspace direct_sum(const std::vector<Subspace>& spaces) {
  return sum_except(spaces, spaces.size());
}

std::vector<Subspace> relative_complements(const std::vector<Subspace>& inner,
                                           const InvariantDecomposition& d, const GramForm& g) {
  std::vector<Subspace> out;
  out.reserve(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    out.push_back(orthogonal_complement(inner[i], d.part(i), g));
  }
  return out;
}

bool complements_condition(const std::vector<Subspace>& inner, const InvariantDecomposition& d,
                           const GramForm& g) {
  const auto perps = relative_complements(inner, d, g);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!are_orthogonal(perps[i], sum_except(inner, i), g)) return false;
  }
  return true;
}

}  // namespace

bool check_invariance(const Matrix& a, const InvariantDecomposition& d) {
  require_square(a, d);
  for (const auto& part : d.parts()) {
    if (!part.contains(a * part.basis())) return false;
  }
  return true;
}

Matrix restriction(const Matrix& a, const Subspace& part) {
  return coordinates_in(part.basis(), a * part.basis());
}

GramForm restricted_gram(const Subspace& part, const GramForm& g) {
  // gram_pairing(B, B)(k, l) = g(b_l, b_k); the induced form wants g(b_k, b_l).
  return GramForm(gram_pairing(part.basis(), part.basis(), g).transpose());
}

Matrix blockwise_rgi(const Matrix& a, const InvariantDecomposition& d, const GramForm& g) {
  require_square(a, d);
  require_invariant(a, d);
  std::vector<Matrix> blocks;
  blocks.reserve(d.size());
  for (const auto& part : d.parts()) {
    const GramForm gi = restricted_gram(part, g);
    blocks.push_back(mp_inverse_geometric(restriction(a, part), gi, gi));
  }
  const Matrix& p = d.concatenated_basis();
  return p * Matrix::block_diagonal(blocks) * inverse(p);
}

std::vector<Subspace> part_images(const Matrix& a, const InvariantDecomposition& d) {
  std::vector<Subspace> out;
  out.reserve(d.size());
  for (const auto& part : d.parts()) out.push_back(Subspace::span(a * part.basis()));
  return out;
}

std::vector<Subspace> part_kernels(const Matrix& a, const InvariantDecomposition& d) {
  std::vector<Subspace> out;
  out.reserve(d.size());
  for (const auto& part : d.parts()) {
    out.push_back(Subspace::from_basis(part.basis() * kernel_basis(restriction(a, part)).basis()));
  }
  return out;
}

CharConditions char_conditions(const Matrix& a, const InvariantDecomposition& d,
                               const GramForm& g) {
  require_square(a, d);
  require_invariant(a, d);
  return {complements_condition(part_images(a, d), d, g),
          complements_condition(part_kernels(a, d), d, g)};
}

DecompositionComplements decomposition_complements(const Matrix& a,
                                                   const InvariantDecomposition& d,
                                                   const GramForm& g) {
  require_square(a, d);
  require_invariant(a, d);
  const auto images = part_images(a, d);
  const auto kernels = part_kernels(a, d);
  DecompositionComplements out{direct_sum(relative_complements(images, d, g)),
                               direct_sum(relative_complements(kernels, d, g))};

  const std::size_t n = d.ambient_dim();
  const Subspace im = image_basis(a);
  const Subspace ker = kernel_basis(a);
  if (im.dim() + out.image_complement.dim() != n ||
      Subspace::sum(im, out.image_complement).dim() != n ||
      ker.dim() + out.kernel_complement.dim() != n ||
      Subspace::sum(ker, out.kernel_complement).dim() != n) {
    throw Error("decomposition complements do not split the ambient space");
  }
  return out;
}

}  // namespace mpinv
