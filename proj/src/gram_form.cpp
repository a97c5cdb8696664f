#include "mpinv/gram_form.hpp"

#include "mpinv/error.hpp"

namespace mpinv {

GramForm::GramForm(Matrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square() || entries_.rows() == 0) {
    throw DimensionError("Gram form must be a non-empty square matrix");
  }
  const std::size_t n = entries_.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (!(entries_(j, i) == entries_(i, j).conj())) {
        throw Error("Gram form is not conjugate-symmetric");
      }
  for (std::size_t k = 1; k <= n; ++k) {
    const Scalar minor = determinant(entries_.block(0, 0, k, k));
    if (!minor.is_real() || sgn(minor.re()) <= 0) {
      throw Error("Gram form is not positive definite (leading minor " + std::to_string(k) +
                  " = " + minor.to_string() + ")");
    }
  }
  identity_ = entries_ == Matrix::identity(n);
}

GramForm::GramForm(Matrix entries, Trusted) : entries_(std::move(entries)), identity_(true) {}

GramForm GramForm::identity(std::size_t dim) {
  if (dim == 0) throw DimensionError("Gram form must be non-empty");
  return {Matrix::identity(dim), Trusted{}};
}

namespace {

void check_index(std::size_t index, const GramForm& g) {
  if (index > g.dim()) {
    throw DimensionError("index " + std::to_string(index) + " exceeds Gram dimension " +
                         std::to_string(g.dim()));
  }
}

}  // namespace

Scalar inner_product(const SparseVector& v, const SparseVector& w, const GramForm& g) {
  Scalar sum;
  for (const auto& [i, vi] : v.entries()) check_index(i, g);
  for (const auto& [j, wj] : w.entries()) check_index(j, g);
  for (const auto& [i, vi] : v.entries()) {
    for (const auto& [j, wj] : w.entries()) {
      const Scalar& gij = g(i - 1, j - 1);
      if (!gij.is_zero()) sum += vi * wj.conj() * gij;
    }
  }
  return sum;
}

Scalar inner_product(const SparseVector& v, const SparseVector& w) {
  Scalar sum;
  auto i = v.entries().begin();
  auto j = w.entries().begin();
  while (i != v.entries().end() && j != w.entries().end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      sum += i->second * j->second.conj();
      ++i;
      ++j;
    }
  }
  return sum;
}

Scalar inner_product(std::span<const Scalar> v, std::span<const Scalar> w, const GramForm& g) {
  if (v.size() != g.dim() || w.size() != g.dim()) {
    throw DimensionError("inner product: vector length differs from Gram dimension");
  }
  Scalar sum;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (w[j].is_zero() || g(i, j).is_zero()) continue;
      sum += v[i] * w[j].conj() * g(i, j);
    }
  }
  return sum;
}

Rational norm_squared(const SparseVector& v, const GramForm& g) {
  return inner_product(v, v, g).re();
}

Rational norm_squared(const SparseVector& v) {
  Rational sum = 0;
  for (const auto& e : v.entries()) sum += e.second.abs_squared();
  return sum;
}

Rational norm_squared(std::span<const Scalar> v, const GramForm& g) {
  return inner_product(v, v, g).re();
}

}  // namespace mpinv
