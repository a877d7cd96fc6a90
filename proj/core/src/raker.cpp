#include "boks/raker.hpp"

#include <cmath>
#include <random>

#include "boks/error.hpp"
#include "boks/hedge.hpp"
#include "boks/rng.hpp"

namespace boks {

Raker::Raker(RakerConfig config) : config_(std::move(config)) {
  if (config_.sigmas.empty()) throw ConfigError("raker needs at least one kernel");
  if (config_.features == 0) throw ConfigError("raker needs D >= 1");
  if (config_.dimension == 0) throw ConfigError("raker needs the input dimension");
  if (!(config_.step >= 0.0) || !(config_.regularizer >= 0.0)) throw ConfigError("raker rates must be >= 0");
  const std::size_t k = config_.sigmas.size();
  models_.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const double sigma = config_.sigmas[i];
    if (!(sigma > 0.0)) throw ConfigError("raker sigma must be positive");
    auto rng = make_stream(config_.seed, i);
    std::normal_distribution<double> normal(0.0, 1.0 / sigma);
    auto& m = models_[i];
    m.frequencies.resize(config_.dimension * config_.features);
    for (double& w : m.frequencies) w = normal(rng);
    m.theta.assign(2 * config_.features, 0.0);
  }
  cum_loss_.assign(k, 0.0);
  weights_.assign(k, 1.0 / static_cast<double>(k));
}

double Raker::weight_rate() const noexcept { return config_.weight_rate > 0.0 ? config_.weight_rate : config_.step; }

std::vector<double> Raker::features(std::size_t kernel, const SparseVector& x) const {
  const std::size_t dd = config_.features;
  const auto& omega = models_[kernel].frequencies;
  std::vector<double> proj(dd, 0.0);
  const auto& idx = x.indices();
  const auto& val = x.values();
  for (std::size_t n = 0; n < idx.size(); ++n) {
    if (idx[n] == 0 || idx[n] > config_.dimension) {
      throw ConfigError("raker: feature index " + std::to_string(idx[n]) + " outside [1, " +
                        std::to_string(config_.dimension) + "]");
    }
    const double* row = omega.data() + static_cast<std::size_t>(idx[n] - 1) * dd;
    for (std::size_t j = 0; j < dd; ++j) proj[j] += val[n] * row[j];
  }
  std::vector<double> z(2 * dd);
  const double scale = 1.0 / std::sqrt(static_cast<double>(dd));
  for (std::size_t j = 0; j < dd; ++j) {
    z[2 * j] = scale * std::sin(proj[j]);
    z[2 * j + 1] = scale * std::cos(proj[j]);
  }
  return z;
}

Prediction Raker::predict(const SparseVector& x) const {
  Prediction p;
  p.per_kernel.resize(models_.size());
  for (std::size_t i = 0; i < models_.size(); ++i) {
    const auto z = features(i, x);
    double s = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) s += models_[i].theta[j] * z[j];
    p.per_kernel[i] = s;
    p.aggregate += weights_[i] * s;
  }
  p.label = sign_label(p.aggregate);
  return p;
}

RoundRecord Raker::update(const SparseVector& x, Label y) {
  check_label(y);
  RoundRecord rec;
  rec.round = ++round_;
  rec.y = y;
  rec.kernels.resize(models_.size());
  rec.prediction.per_kernel.resize(models_.size());

  for (std::size_t i = 0; i < models_.size(); ++i) {
    auto& m = models_[i];
    const auto z = features(i, x);
    double u = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) u += m.theta[j] * z[j];
    rec.prediction.per_kernel[i] = u;
    rec.prediction.aggregate += weights_[i] * u;
    rec.kernels[i].value = u;
    rec.kernels[i].loss = loss_value(config_.loss, u, y);

    const double g = loss_deriv(config_.loss, u, y);
    for (std::size_t j = 0; j < z.size(); ++j) {
      m.theta[j] -= config_.step * (g * z[j] + config_.regularizer * m.theta[j]);
      if (!std::isfinite(m.theta[j])) throw NumericError("raker: non-finite weights");
    }
  }
  rec.prediction.label = sign_label(rec.prediction.aggregate);
  rec.mistake = rec.prediction.label != y;
  rec.loss = loss_value(config_.loss, rec.prediction.aggregate, y);

  for (std::size_t i = 0; i < models_.size(); ++i) cum_loss_[i] += rec.kernels[i].loss;
  weights_ = exponential_weights(cum_loss_, weight_rate());
  return rec;
}

}  // namespace boks
