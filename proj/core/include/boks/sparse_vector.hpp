#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace boks {

using FeatureIndex = std::uint32_t;

// Sparse feature vector with strictly ascending indices and a cached
// squared Euclidean norm. Indices follow the LIBSVM convention (1-based),
// but nothing here depends on the base.
class SparseVector {
 public:
  SparseVector() = default;

  // Throws ParseError if indices are not strictly ascending or a value is
  // non-finite.
  SparseVector(std::vector<FeatureIndex> indices, std::vector<double> values);
  SparseVector(std::initializer_list<std::pair<FeatureIndex, double>> entries);

  // Dense constructor: entry k becomes index k + 1; zeros are skipped.
  static SparseVector from_dense(const std::vector<double>& dense);

  const std::vector<FeatureIndex>& indices() const noexcept { return indices_; }
  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t nnz() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  double squared_norm() const noexcept { return sq_norm_; }

  // Largest stored index, 0 when empty.
  FeatureIndex max_index() const noexcept { return indices_.empty() ? 0 : indices_.back(); }

  // Value at index, 0 when absent. O(log nnz).
  double at(FeatureIndex index) const noexcept;

  friend bool operator==(const SparseVector& a, const SparseVector& b) noexcept {
    return a.indices_ == b.indices_ && a.values_ == b.values_;
  }

 private:
  std::vector<FeatureIndex> indices_;
  std::vector<double> values_;
  double sq_norm_ = 0.0;
};

// Merged traversal of the two sorted index lists.
double dot(const SparseVector& a, const SparseVector& b) noexcept;

// ||a - b||^2 via cached norms; clamped at 0.
double squared_distance(const SparseVector& a, const SparseVector& b) noexcept;

}  // namespace boks
