#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "boks/budgeted_function.hpp"
#include "boks/hedge.hpp"
#include "boks/kernel.hpp"
#include "boks/learner.hpp"
#include "boks/loss.hpp"

namespace boks {

struct SmoothLearnerConfig {
  std::vector<KernelSpec> kernels;
  std::size_t budget = 400;      // shared buffer size, even
  std::optional<double> radius;  // defaults to sqrt(budget)
  double lambda_scale = 1.0;
  LambdaMode lambda_mode = LambdaMode::experimental;
  RemovalMode removal = RemovalMode::half;
  SmoothLoss loss = logistic_loss();
  std::uint64_t seed = 0;
};

// Hedge losses for the smooth learner:
//   d > 0: c_i = d (v_i - min_j v_j),  otherwise c_i = d (v_i - max_j v_j).
std::vector<double> pea_losses(std::span<const double> values, double d);

// Removal bound ceil(4 g2 L / ((B - (4/3) ln(1/delta)) g1)).
double smooth_removal_bound(double cumulative_loss, std::size_t budget, double g1, double g2, double delta = 0.01);

// P[b = 1] = |d| / (|d| + g1): the kernel diagonal cancels in the normaliser.
double smooth_sampling_probability(double d, double g1);

// Memory-bounded mirror descent for smooth losses. All kernels share one
// buffer; every kernel is stepped with the derivative of the aggregate
// prediction, so a single coin decides insertion for all of them.
class MomdSmooth {
 public:
  explicit MomdSmooth(SmoothLearnerConfig config);

  Prediction predict(const SparseVector& x) const;
  RoundRecord update(const SparseVector& x, Label y);

  std::size_t kernel_count() const noexcept { return functions_.size(); }
  const SmoothLearnerConfig& config() const noexcept { return config_; }
  double radius() const noexcept { return radius_; }
  double lambda(std::size_t i) const noexcept { return lambdas_[i]; }

  const BudgetedFunction& function(std::size_t i) const noexcept { return functions_[i]; }
  const std::vector<ExampleId>& buffer() const noexcept { return buffer_; }
  std::size_t removals() const noexcept { return removals_; }
  double derivative_sum() const noexcept { return deriv_sum_; }
  double cumulative_loss() const noexcept { return cum_loss_; }
  const Hedge& hedge() const noexcept { return hedge_; }
  const ExampleStore& store() const noexcept { return *store_; }
  std::uint64_t rounds() const noexcept { return round_; }

  // Euclidean-nearest buffered example, earliest on ties.
  std::optional<std::size_t> nearest_support(const SparseVector& x) const;

 private:
  SmoothLearnerConfig config_;
  double radius_;
  std::vector<double> lambdas_;
  std::shared_ptr<ExampleStore> store_;
  std::vector<BudgetedFunction> functions_;
  std::vector<ExampleId> buffer_;
  Hedge hedge_;
  std::mt19937_64 rng_;
  double deriv_sum_ = 0.0;
  double cum_loss_ = 0.0;
  std::size_t removals_ = 0;
  std::uint64_t round_ = 0;
};

}  // namespace boks
