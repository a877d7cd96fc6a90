#include "boks/momd_smooth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boks/error.hpp"
#include "boks/rng.hpp"

namespace boks {

std::vector<double> pea_losses(std::span<const double> values, double d) {
  std::vector<double> c(values.size(), 0.0);
  if (values.empty() || d == 0.0) return c;
  const double ref = d > 0.0 ? *std::min_element(values.begin(), values.end())
                             : *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < values.size(); ++i) c[i] = d * (values[i] - ref);
  return c;
}

double smooth_removal_bound(double cumulative_loss, std::size_t budget, double g1, double g2, double delta) {
  const double effective = static_cast<double>(budget) - (4.0 / 3.0) * std::log(1.0 / delta);
  return std::ceil(4.0 * g2 * cumulative_loss / (effective * g1));
}

double smooth_sampling_probability(double d, double g1) {
  const double a = std::abs(d);
  return a == 0.0 ? 0.0 : a / (a + g1);
}

MomdSmooth::MomdSmooth(SmoothLearnerConfig config)
    : config_(std::move(config)),
      radius_(config_.radius.value_or(std::sqrt(static_cast<double>(config_.budget)))),
      store_(std::make_shared<ExampleStore>()),
      hedge_(config_.kernels.empty() ? 1 : config_.kernels.size()),
      rng_(make_stream(config_.seed, 0)) {
  if (config_.kernels.empty()) throw ConfigError("need at least one kernel");
  if (config_.budget < 2 || config_.budget % 2 != 0) {
    throw BudgetError("shared buffer budget must be even and >= 2, got " + std::to_string(config_.budget));
  }
  if (!(radius_ > 0.0)) throw ConfigError("ball radius U must be positive");
  if (!(config_.lambda_scale > 0.0)) throw ConfigError("lambda_scale must be positive");
  if (!(config_.loss.g1 > 0.0) || !(config_.loss.g2 > 0.0)) throw ConfigError("loss constants must be positive");
  const double b = static_cast<double>(config_.budget);
  const double lambda = config_.lambda_mode == LambdaMode::experimental
                            ? config_.lambda_scale * radius_ / std::sqrt(b)
                            : 2.0 * radius_ / (config_.loss.g1 * std::sqrt(b));
  lambdas_.assign(config_.kernels.size(), lambda);
  functions_.reserve(config_.kernels.size());
  for (const auto& k : config_.kernels) functions_.emplace_back(k, store_);
}

Prediction MomdSmooth::predict(const SparseVector& x) const {
  Prediction p;
  p.per_kernel.resize(functions_.size());
  const auto& w = hedge_.distribution();
  for (std::size_t i = 0; i < functions_.size(); ++i) {
    p.per_kernel[i] = functions_[i].evaluate(x);
    p.aggregate += w[i] * p.per_kernel[i];
  }
  p.label = sign_label(p.aggregate);
  return p;
}

std::optional<std::size_t> MomdSmooth::nearest_support(const SparseVector& x) const {
  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < buffer_.size(); ++j) {
    const double d = squared_distance(store_->get(buffer_[j]).x, x);
    if (d < best_dist) {
      best_dist = d;
      best = j;
    }
  }
  return best;
}

RoundRecord MomdSmooth::update(const SparseVector& x, Label y) {
  check_label(y);
  RoundRecord rec;
  rec.round = ++round_;
  rec.y = y;
  rec.prediction = predict(x);
  rec.mistake = rec.prediction.label != y;

  const double u = rec.prediction.aggregate;
  const double d = config_.loss.deriv(u, y);
  if (!std::isfinite(d)) throw NumericError("non-finite loss derivative at round " + std::to_string(round_));
  rec.loss = config_.loss.value(u, y);

  const std::size_t k = functions_.size();
  const double gamma = std::sqrt(2.0 * std::log(static_cast<double>(k))) / std::sqrt(1.0 + deriv_sum_ + std::abs(d));

  Branch branch = Branch::skipped;
  double prob = 0.0;
  std::optional<ExampleId> anchor;
  if (auto s = nearest_support(x)) {
    const SparseVector& xs = store_->get(buffer_[*s]).x;
    double worst = 0.0;
    for (std::size_t i = 0; i < k; ++i) worst = std::max(worst, feature_distance(config_.kernels[i], xs, x));
    if (worst <= gamma) anchor = buffer_[*s];
  }

  if (anchor) {
    branch = Branch::proxy;
    for (std::size_t i = 0; i < k; ++i) {
      functions_[i].add_scaled(-lambdas_[i] * d, *anchor);
      functions_[i].project_ball(radius_);
    }
  } else {
    prob = smooth_sampling_probability(d, config_.loss.g1);
    if (draw_bernoulli(rng_, prob)) {
      const ExampleId x_id = store_->add(Example{x, y});
      branch = Branch::inserted;
      if (buffer_.size() >= config_.budget) {
        if (config_.removal == RemovalMode::half) {
          for (auto& f : functions_) {
            f.split_half(HalfToKeep::newest);
            f.project_ball(radius_);
          }
          buffer_.erase(buffer_.begin(), buffer_.begin() + static_cast<std::ptrdiff_t>(buffer_.size() / 2));
        } else {
          for (auto& f : functions_) f.clear();
          buffer_.clear();
        }
        ++removals_;
        branch = Branch::removed;
      }
      for (std::size_t i = 0; i < k; ++i) {
        functions_[i].add_scaled(-lambdas_[i] * d / prob, x_id);
        functions_[i].project_ball(radius_);
        functions_[i].push_buffer(x_id);
      }
      buffer_.push_back(x_id);
      store_->release(x_id);
    }
  }

  rec.kernels.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    rec.kernels[i].value = rec.prediction.per_kernel[i];
    rec.kernels[i].branch = branch;
    rec.kernels[i].probability = prob;
  }
  const auto losses = pea_losses(rec.prediction.per_kernel, d);
  for (std::size_t i = 0; i < k; ++i) rec.kernels[i].loss = losses[i];
  hedge_.update(losses);
  deriv_sum_ += std::abs(d);
  cum_loss_ += rec.loss;
  return rec;
}

}  // namespace boks
