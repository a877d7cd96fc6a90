#pragma once

#include <cstdint>
#include <vector>

#include "boks/learner.hpp"
#include "boks/loss.hpp"
#include "boks/sparse_vector.hpp"

namespace boks {

struct RakerConfig {
  std::vector<double> sigmas;
  std::size_t features = 400;    // D
  std::size_t dimension = 0;     // input dimension d
  double step = 0.01;            // eta
  double regularizer = 0.005;    // lambda
  double weight_rate = 0.0;      // multiplicative-weight rate; 0 means "same as step"
  LossKind loss = LossKind::hinge;
  std::uint64_t seed = 0;
};

// Random-feature online multi-kernel baseline: one linear model per
// Gaussian kernel over D random Fourier features, trained by online
// gradient descent, mixed by exponential weights on per-kernel losses.
class Raker {
 public:
  explicit Raker(RakerConfig config);

  // z(x) = D^{-1/2} [sin(w_1.x), cos(w_1.x), ..., sin(w_D.x), cos(w_D.x)]
  std::vector<double> features(std::size_t kernel, const SparseVector& x) const;

  Prediction predict(const SparseVector& x) const;
  RoundRecord update(const SparseVector& x, Label y);

  std::size_t kernel_count() const noexcept { return models_.size(); }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& cumulative_loss() const noexcept { return cum_loss_; }
  const std::vector<double>& theta(std::size_t kernel) const noexcept { return models_[kernel].theta; }
  const RakerConfig& config() const noexcept { return config_; }

 private:
  struct Model {
    std::vector<double> frequencies;  // dimension x D, row per input feature
    std::vector<double> theta;        // 2D
  };

  double weight_rate() const noexcept;

  RakerConfig config_;
  std::vector<Model> models_;
  std::vector<double> cum_loss_;
  std::vector<double> weights_;
  std::uint64_t round_ = 0;
};

}  // namespace boks
