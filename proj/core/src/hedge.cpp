#include "boks/hedge.hpp"

#include <algorithm>
#include <cmath>

#include "boks/error.hpp"

namespace boks {

std::vector<double> exponential_weights(std::span<const double> losses, double rate) {
  std::vector<double> p(losses.size(), 0.0);
  if (losses.empty()) return p;
  const double best = *std::min_element(losses.begin(), losses.end());
  double total = 0.0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    p[i] = std::exp(-rate * (losses[i] - best));
    total += p[i];
  }
  for (double& v : p) v /= total;
  return p;
}

Hedge::Hedge(std::size_t experts) : cum_loss_(experts, 0.0) {
  if (experts == 0) throw ConfigError("hedge needs at least one expert");
  refresh();
}

double Hedge::learning_rate() const noexcept {
  const double k = static_cast<double>(cum_loss_.size());
  return std::sqrt(2.0 * std::log(k)) / std::sqrt(1.0 + second_moment_);
}

void Hedge::update(std::span<const double> losses) {
  if (losses.size() != cum_loss_.size()) throw NumericError("hedge: loss vector has wrong length");
  for (double c : losses) {
    if (!std::isfinite(c) || c < 0.0) throw NumericError("hedge: losses must be finite and non-negative");
  }
  double moment = 0.0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    moment += p_[i] * losses[i] * losses[i];
    cum_loss_[i] += losses[i];
  }
  second_moment_ += moment;
  ++rounds_;
  refresh();
}

void Hedge::refresh() { p_ = exponential_weights(cum_loss_, learning_rate()); }

std::size_t Hedge::leader() const noexcept {
  return static_cast<std::size_t>(std::max_element(p_.begin(), p_.end()) - p_.begin());
}

}  // namespace boks
