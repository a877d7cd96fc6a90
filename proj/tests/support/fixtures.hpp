#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "boks/dataset.hpp"
#include "boks/sparse_vector.hpp"

namespace boks::fixture {

inline SparseVector random_vector(std::mt19937_64& rng, std::size_t dim, double density = 0.6, double scale = 1.0) {
  std::uniform_real_distribution<double> u(-scale, scale);
  std::bernoulli_distribution keep(density);
  std::vector<FeatureIndex> idx;
  std::vector<double> val;
  for (std::size_t k = 0; k < dim; ++k) {
    if (!keep(rng)) continue;
    idx.push_back(static_cast<FeatureIndex>(k + 1));
    val.push_back(u(rng));
  }
  return SparseVector(std::move(idx), std::move(val));
}

// Two Gaussian blobs centred at +-shift on every coordinate, labels +1/-1.
inline Dataset blobs(std::size_t n, std::size_t dim, double shift, double noise, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, noise);
  std::bernoulli_distribution coin(0.5);
  Dataset ds;
  ds.name = "blobs";
  ds.dimension = dim;
  for (std::size_t t = 0; t < n; ++t) {
    const Label y = coin(rng) ? 1 : -1;
    std::vector<double> dense(dim);
    for (auto& v : dense) v = y * shift + g(rng);
    ds.examples.push_back(Example{SparseVector::from_dense(dense), y});
  }
  return ds;
}

// Sample mean and standard error.
struct MeanSe {
  double mean;
  double se;
};

inline MeanSe mean_se(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  const double var = ss / static_cast<double>(v.size() - 1);
  return {m, std::sqrt(var / static_cast<double>(v.size()))};
}

}  // namespace boks::fixture
