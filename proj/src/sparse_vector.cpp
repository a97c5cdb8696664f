#include "mpinv/sparse_vector.hpp"

#include <algorithm>

#include "mpinv/error.hpp"

namespace mpinv {

SparseVector::SparseVector(std::initializer_list<Entry> entries)
    : SparseVector(std::vector<Entry>(entries)) {}

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& [index, value] : entries) {
    if (index == 0) throw DimensionError("sparse vector indices start at 1");
    if (!entries_.empty() && entries_.back().first == index) {
      entries_.back().second += value;
      if (entries_.back().second.is_zero()) entries_.pop_back();
    } else if (!value.is_zero()) {
      entries_.emplace_back(index, std::move(value));
    }
  }
}

SparseVector SparseVector::unit(std::size_t index) { return SparseVector{{index, Scalar(1)}}; }

SparseVector SparseVector::from_dense(std::span<const Scalar> dense, std::size_t offset) {
  SparseVector v;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) v.entries_.emplace_back(offset + k + 1, dense[k]);
  }
  return v;
}

Scalar SparseVector::operator[](std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  return (it != entries_.end() && it->first == index) ? it->second : Scalar();
}

void SparseVector::set(std::size_t index, const Scalar& value) {
  if (index == 0) throw DimensionError("sparse vector indices start at 1");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.first < i; });
  const bool present = it != entries_.end() && it->first == index;
  if (value.is_zero()) {
    if (present) entries_.erase(it);
  } else if (present) {
    it->second = value;
  } else {
    entries_.emplace(it, index, value);
  }
}

std::vector<Scalar> SparseVector::to_dense(std::size_t dim, std::size_t offset) const {
  std::vector<Scalar> dense(dim);
  for (const auto& [index, value] : entries_) {
    if (index > offset && index <= offset + dim) dense[index - offset - 1] = value;
  }
  return dense;
}

namespace {

template <typename Op>
std::vector<SparseVector::Entry> merge(const std::vector<SparseVector::Entry>& a,
                                       const std::vector<SparseVector::Entry>& b, Op op) {
  std::vector<SparseVector::Entry> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, op(Scalar(), j->second));
      ++j;
    } else {
      Scalar s = op(i->second, j->second);
      if (!s.is_zero()) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVector& SparseVector::operator+=(const SparseVector& o) {
  entries_ = merge(entries_, o.entries_, [](const Scalar& x, const Scalar& y) { return x + y; });
  return *this;
}

SparseVector& SparseVector::operator-=(const SparseVector& o) {
  entries_ = merge(entries_, o.entries_, [](const Scalar& x, const Scalar& y) { return x - y; });
  return *this;
}

SparseVector& SparseVector::operator*=(const Scalar& a) {
  if (a.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= a;
  return *this;
}

SparseVector SparseVector::operator-() const {
  SparseVector v = *this;
  for (auto& e : v.entries_) e.second = -e.second;
  return v;
}

}  // namespace mpinv
