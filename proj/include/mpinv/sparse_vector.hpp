#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "mpinv/scalar.hpp"

namespace mpinv {

/// Finitely supported vector over the standard basis v_1, v_2, ...
/// Indices are 1-based, strictly increasing, and no stored value is zero.
class SparseVector {
 public:
  using Entry = std::pair<std::size_t, Scalar>;

  SparseVector() = default;
  /// Entries may come in any order; duplicates are summed, zeros dropped.
  SparseVector(std::initializer_list<Entry> entries);
  explicit SparseVector(std::vector<Entry> entries);

  /// The basis vector v_index.
  static SparseVector unit(std::size_t index);
  /// Coordinates dense[k] placed at index offset + k + 1.
  static SparseVector from_dense(std::span<const Scalar> dense, std::size_t offset = 0);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  /// Largest index in the support, 0 for the zero vector.
  std::size_t max_index() const { return entries_.empty() ? 0 : entries_.back().first; }

  Scalar operator[](std::size_t index) const;
  void set(std::size_t index, const Scalar& value);

  /// Coordinates offset+1 .. offset+dim as a dense array.
  std::vector<Scalar> to_dense(std::size_t dim, std::size_t offset = 0) const;

  SparseVector& operator+=(const SparseVector& o);
  SparseVector& operator-=(const SparseVector& o);
  SparseVector& operator*=(const Scalar& a);
  SparseVector operator-() const;

  friend SparseVector operator+(SparseVector a, const SparseVector& b) { return a += b; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { return a -= b; }
  friend SparseVector operator*(const Scalar& a, SparseVector v) { return v *= a; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;

 private:
  std::vector<Entry> entries_;
};

}  // namespace mpinv
