#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace boks {

// Exponential weights over K experts with the self-tuning rate
//   eta_t = sqrt(2 ln K) / sqrt(1 + sum_tau sum_i p_{tau,i} c_{tau,i}^2).
// Only cumulative losses are stored; the distribution is a max-shifted
// softmax so weights never underflow.
class Hedge {
 public:
  explicit Hedge(std::size_t experts);

  std::size_t size() const noexcept { return cum_loss_.size(); }
  const std::vector<double>& distribution() const noexcept { return p_; }
  double learning_rate() const noexcept;

  // Losses must be finite and non-negative (NumericError otherwise).
  void update(std::span<const double> losses);

  const std::vector<double>& cumulative_loss() const noexcept { return cum_loss_; }
  double second_moment() const noexcept { return second_moment_; }
  std::size_t rounds() const noexcept { return rounds_; }

  // Index of the largest probability; ties go to the lowest index.
  std::size_t leader() const noexcept;

 private:
  void refresh();

  std::vector<double> cum_loss_;
  std::vector<double> p_;
  double second_moment_ = 0.0;
  std::size_t rounds_ = 0;
};

// Softmax of -rate * losses with max-subtraction.
std::vector<double> exponential_weights(std::span<const double> losses, double rate);

}  // namespace boks
