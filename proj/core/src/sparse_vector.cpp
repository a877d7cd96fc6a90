#include "boks/sparse_vector.hpp"

#include <algorithm>
#include <cmath>

#include "boks/error.hpp"

namespace boks {

SparseVector::SparseVector(std::vector<FeatureIndex> indices, std::vector<double> values)
    : indices_(std::move(indices)), values_(std::move(values)) {
  if (indices_.size() != values_.size()) {
    throw ParseError("sparse vector: index/value length mismatch");
  }
  for (std::size_t k = 0; k < indices_.size(); ++k) {
    if (k > 0 && indices_[k] <= indices_[k - 1]) {
      throw ParseError("sparse vector: indices must be strictly ascending");
    }
    if (!std::isfinite(values_[k])) {
      throw ParseError("sparse vector: non-finite value at index " + std::to_string(indices_[k]));
    }
    sq_norm_ += values_[k] * values_[k];
  }
}

SparseVector::SparseVector(std::initializer_list<std::pair<FeatureIndex, double>> entries) {
  std::vector<FeatureIndex> idx;
  std::vector<double> val;
  idx.reserve(entries.size());
  val.reserve(entries.size());
  for (const auto& [i, v] : entries) {
    idx.push_back(i);
    val.push_back(v);
  }
  *this = SparseVector(std::move(idx), std::move(val));
}

SparseVector SparseVector::from_dense(const std::vector<double>& dense) {
  std::vector<FeatureIndex> idx;
  std::vector<double> val;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (dense[k] != 0.0) {
      idx.push_back(static_cast<FeatureIndex>(k + 1));
      val.push_back(dense[k]);
    }
  }
  return SparseVector(std::move(idx), std::move(val));
}

double SparseVector::at(FeatureIndex index) const noexcept {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
  if (it == indices_.end() || *it != index) return 0.0;
  return values_[static_cast<std::size_t>(it - indices_.begin())];
}

double dot(const SparseVector& a, const SparseVector& b) noexcept {
  const auto& ia = a.indices();
  const auto& ib = b.indices();
  const auto& va = a.values();
  const auto& vb = b.values();
  std::size_t p = 0, q = 0;
  double sum = 0.0;
  while (p < ia.size() && q < ib.size()) {
    if (ia[p] == ib[q]) {
      sum += va[p++] * vb[q++];
    } else if (ia[p] < ib[q]) {
      ++p;
    } else {
      ++q;
    }
  }
  return sum;
}

double squared_distance(const SparseVector& a, const SparseVector& b) noexcept {
  if (&a == &b) return 0.0;
  const double d = a.squared_norm() + b.squared_norm() - 2.0 * dot(a, b);
  return d > 0.0 ? d : 0.0;
}

}  // namespace boks
