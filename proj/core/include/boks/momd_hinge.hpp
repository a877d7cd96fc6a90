#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "boks/budgeted_function.hpp"
#include "boks/hedge.hpp"
#include "boks/kernel.hpp"
#include "boks/learner.hpp"
#include "boks/reservoir.hpp"

namespace boks {

struct HingeLearnerConfig {
  std::vector<KernelSpec> kernels;
  std::size_t budget = 400;            // total examples, reservoir archive included
  std::size_t reservoir_capacity = 10;
  std::optional<double> radius;        // defaults to sqrt(budget)
  double lambda_scale = 1.0;
  LambdaMode lambda_mode = LambdaMode::experimental;
  RemovalMode removal = RemovalMode::half;
  std::uint64_t horizon = 0;           // T, or an estimate when streaming
  std::uint64_t seed = 0;
};

struct BudgetAllocation {
  std::size_t archive_cap = 0;  // B_0
  std::size_t per_kernel = 0;   // B_i, even
};

// B_0 = min(ceil(M (1 + ceil(ln T))), floor(B / 2)), B_i = 2 floor((B - B_0) / (2K)).
// Throws BudgetError when B_i < 2.
BudgetAllocation allocate_budgets(std::size_t budget, std::size_t reservoir_capacity, std::size_t kernels,
                                  std::uint64_t horizon);

// Coefficients of the sampled gradient
//   grad~ = (grad - g) / P * 1[sampled] + g,   grad = -y kappa(x, .),
// where g is the reservoir estimate given by its coefficients. With
// sampled ~ Bernoulli(P) its expectation is grad.
std::vector<std::pair<ExampleId, double>> hinge_gradient_estimate(
    ExampleId x_id, Label y, std::span<const std::pair<ExampleId, double>> optimistic, double probability,
    bool sampled);

// Expected-removal bound ceil(4 K A / (B k1)) for one kernel.
double hinge_removal_bound(std::size_t kernels, double alignment, std::size_t budget, double k1 = 1.0);

// Memory-bounded optimistic mirror descent for the hinge loss, one budgeted
// hypothesis per kernel, aggregated with Hedge.
class MomdHinge {
 public:
  explicit MomdHinge(HingeLearnerConfig config);

  Prediction predict(const SparseVector& x) const;

  // Runs one full round (prediction then update) and returns its record.
  RoundRecord update(const SparseVector& x, Label y);

  std::size_t kernel_count() const noexcept { return kernels_.size(); }
  const HingeLearnerConfig& config() const noexcept { return config_; }
  const BudgetAllocation& allocation() const noexcept { return allocation_; }
  double radius() const noexcept { return radius_; }
  double lambda(std::size_t i) const noexcept { return kernels_[i].lambda; }

  const BudgetedFunction& function(std::size_t i) const noexcept { return kernels_[i].f; }
  // Sum of ||grad - optimistic grad||^2 over rounds with a non-zero gradient.
  double gap_sum(std::size_t i) const noexcept { return kernels_[i].gap_sum; }
  std::size_t removals(std::size_t i) const noexcept { return kernels_[i].removals; }

  const Reservoir& reservoir() const noexcept { return *reservoir_; }
  const Hedge& hedge() const noexcept { return hedge_; }
  const ExampleStore& store() const noexcept { return *store_; }
  std::uint64_t rounds() const noexcept { return round_; }

  // Index of the closest own-buffer example to x in kernel i's feature
  // space, earliest on ties; nullopt when the buffer is empty.
  std::optional<std::size_t> nearest_support(std::size_t i, const SparseVector& x) const;

 private:
  struct KernelState {
    KernelSpec spec;
    BudgetedFunction f;
    double lambda;
    double gap_sum = 0.0;
    std::size_t removals = 0;
    std::mt19937_64 rng;
  };

  struct Evaluation {
    std::vector<double> primal;      // f'_{t-1,i}(x)
    std::vector<double> optimistic;  // g_i(x)
    Prediction prediction;
  };

  Evaluation evaluate(const SparseVector& x) const;
  KernelRound update_kernel(std::size_t i, ExampleId x_id, const Example& ex, double primal, double optimistic);

  HingeLearnerConfig config_;
  BudgetAllocation allocation_;
  double radius_;
  std::shared_ptr<ExampleStore> store_;
  std::vector<KernelState> kernels_;
  std::unique_ptr<Reservoir> reservoir_;
  std::mt19937_64 reservoir_rng_;
  Hedge hedge_;
  std::uint64_t round_ = 0;
};

}  // namespace boks
