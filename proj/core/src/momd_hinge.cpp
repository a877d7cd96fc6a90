#include "boks/momd_hinge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "boks/error.hpp"
#include "boks/loss.hpp"
#include "boks/rng.hpp"

namespace boks {

BudgetAllocation allocate_budgets(std::size_t budget, std::size_t reservoir_capacity, std::size_t kernels,
                                  std::uint64_t horizon) {
  if (kernels == 0) throw ConfigError("need at least one kernel");
  if (reservoir_capacity == 0) throw ConfigError("reservoir capacity must be positive");
  if (horizon == 0) throw ConfigError("horizon T must be positive");
  const double log_t = std::ceil(std::log(static_cast<double>(horizon)));
  const double expected_archive = std::ceil(static_cast<double>(reservoir_capacity) * (1.0 + log_t));
  BudgetAllocation a;
  a.archive_cap = std::min(static_cast<std::size_t>(expected_archive), budget / 2);
  if (a.archive_cap == 0) throw BudgetError("budget leaves no room for the reservoir archive");
  a.per_kernel = 2 * ((budget - a.archive_cap) / (2 * kernels));
  if (a.per_kernel < 2) {
    throw BudgetError("budget " + std::to_string(budget) + " gives per-kernel buffers of " +
                      std::to_string(a.per_kernel) + " < 2 for " + std::to_string(kernels) + " kernels");
  }
  return a;
}

std::vector<std::pair<ExampleId, double>> hinge_gradient_estimate(
    ExampleId x_id, Label y, std::span<const std::pair<ExampleId, double>> optimistic, double probability,
    bool sampled) {
  std::vector<std::pair<ExampleId, double>> out;
  out.reserve(optimistic.size() + 1);
  if (!sampled) {
    out.assign(optimistic.begin(), optimistic.end());
    return out;
  }
  if (!(probability > 0.0)) throw NumericError("sampled gradient with zero probability");
  out.emplace_back(x_id, -static_cast<double>(y) / probability);
  const double keep = 1.0 - 1.0 / probability;
  if (keep != 0.0) {
    for (const auto& [id, c] : optimistic) out.emplace_back(id, keep * c);
  }
  return out;
}

double hinge_removal_bound(std::size_t kernels, double alignment, std::size_t budget, double k1) {
  return std::ceil(4.0 * static_cast<double>(kernels) * alignment / (static_cast<double>(budget) * k1));
}

MomdHinge::MomdHinge(HingeLearnerConfig config)
    : config_(std::move(config)),
      allocation_(allocate_budgets(config_.budget, config_.reservoir_capacity, config_.kernels.size(),
                                   config_.horizon)),
      radius_(config_.radius.value_or(std::sqrt(static_cast<double>(config_.budget)))),
      store_(std::make_shared<ExampleStore>()),
      reservoir_rng_(make_stream(config_.seed, config_.kernels.size())),
      hedge_(config_.kernels.size()) {
  if (!(radius_ > 0.0)) throw ConfigError("ball radius U must be positive");
  if (!(config_.lambda_scale > 0.0)) throw ConfigError("lambda_scale must be positive");
  const double k = static_cast<double>(config_.kernels.size());
  const double b = static_cast<double>(config_.budget);
  const double lambda = config_.lambda_mode == LambdaMode::experimental
                            ? config_.lambda_scale * radius_ / std::sqrt(b)
                            : radius_ * std::sqrt(k) / std::sqrt(2.0 * b);
  kernels_.reserve(config_.kernels.size());
  for (std::size_t i = 0; i < config_.kernels.size(); ++i) {
    kernels_.push_back(KernelState{config_.kernels[i], BudgetedFunction(config_.kernels[i], store_), lambda, 0.0, 0,
                                   make_stream(config_.seed, i)});
  }
  reservoir_ = std::make_unique<Reservoir>(config_.reservoir_capacity, allocation_.archive_cap, config_.kernels,
                                           store_);
}

MomdHinge::Evaluation MomdHinge::evaluate(const SparseVector& x) const {
  Evaluation e;
  const std::size_t k = kernels_.size();
  e.primal.resize(k);
  e.optimistic.resize(k);
  e.prediction.per_kernel.resize(k);
  const auto& p = hedge_.distribution();
  for (std::size_t i = 0; i < k; ++i) {
    e.primal[i] = kernels_[i].f.evaluate(x);
    e.optimistic[i] = reservoir_->optimistic_value(i, x);
    // f_{t,i} = f'_{t-1,i} - lambda g_i, never materialised.
    e.prediction.per_kernel[i] = e.primal[i] - kernels_[i].lambda * e.optimistic[i];
    e.prediction.aggregate += p[i] * e.prediction.per_kernel[i];
  }
  e.prediction.label = sign_label(e.prediction.aggregate);
  return e;
}

Prediction MomdHinge::predict(const SparseVector& x) const { return evaluate(x).prediction; }

std::optional<std::size_t> MomdHinge::nearest_support(std::size_t i, const SparseVector& x) const {
  const auto& buffer = kernels_[i].f.own_buffer();
  std::optional<std::size_t> best;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < buffer.size(); ++j) {
    const double d = feature_distance(kernels_[i].spec, store_->get(buffer[j]).x, x);
    if (d < best_dist) {
      best_dist = d;
      best = j;
    }
  }
  return best;
}

KernelRound MomdHinge::update_kernel(std::size_t i, ExampleId x_id, const Example& ex, double primal,
                                     double optimistic) {
  KernelState& ks = kernels_[i];
  KernelRound out;
  out.value = primal - ks.lambda * optimistic;
  out.loss = HingeLoss::value(out.value, ex.y);

  if (ex.y * out.value >= 1.0) {
    ks.f.project_ball(radius_);
    out.branch = Branch::no_loss;
    return out;
  }

  // grad = -y kappa(x, .): ||grad - g||^2 = kappa(x,x) + ||g||^2 - 2 <grad, g>, <grad, g> = -y g(x).
  const double opt_sq = reservoir_->optimistic_sq_norm(i);
  const double gap_sq = std::max(0.0, eval(ks.spec, ex.x, ex.x) + opt_sq + 2.0 * ex.y * optimistic);
  out.gap_sq = gap_sq;
  ks.gap_sum += gap_sq;
  const double gamma = gap_sq / std::sqrt(1.0 + ks.gap_sum);

  if (auto s = nearest_support(i, ex.x)) {
    const ExampleId anchor = ks.f.own_buffer()[*s];
    if (feature_distance(ks.spec, store_->get(anchor).x, ex.x) <= gamma) {
      ks.f.add_scaled(ks.lambda * ex.y, anchor);
      ks.f.project_ball(radius_);
      out.branch = Branch::proxy;
      return out;
    }
  }

  const auto opt_coeffs = reservoir_->optimistic_coeffs();
  // Exact gradient match: the optimistic guess is the gradient, no sampling.
  const bool exact = gap_sq == 0.0;
  const double prob = exact ? 0.0 : (gap_sq + opt_sq > 0.0 ? gap_sq / (gap_sq + opt_sq) : 1.0);
  out.probability = prob;
  const bool sampled = !exact && draw_bernoulli(ks.rng, prob);

  if (sampled) {
    if (ks.f.own_buffer().size() >= allocation_.per_kernel) {
      if (config_.removal == RemovalMode::half) {
        ks.f.split_half(HalfToKeep::oldest);
        ks.f.project_ball(radius_);
      } else {
        ks.f.clear();
      }
      ++ks.removals;
      out.branch = Branch::removed;
    } else {
      out.branch = Branch::inserted;
    }
  } else {
    out.branch = Branch::skipped;
  }
  auto terms = hinge_gradient_estimate(x_id, ex.y, opt_coeffs, prob, sampled);
  for (auto& term : terms) term.second *= -ks.lambda;
  ks.f.add_combination(terms);
  ks.f.project_ball(radius_);
  if (sampled) ks.f.push_buffer(x_id);
  return out;
}

RoundRecord MomdHinge::update(const SparseVector& x, Label y) {
  check_label(y);
  RoundRecord rec;
  rec.round = ++round_;
  rec.y = y;

  Evaluation e = evaluate(x);
  rec.prediction = e.prediction;
  rec.mistake = rec.prediction.label != y;
  rec.loss = HingeLoss::value(rec.prediction.aggregate, y);

  const ExampleId x_id = store_->add(Example{x, y});
  const Example& ex = store_->get(x_id);
  rec.kernels.resize(kernels_.size());
  std::vector<double> losses(kernels_.size());
  for (std::size_t i = 0; i < kernels_.size(); ++i) {
    rec.kernels[i] = update_kernel(i, x_id, ex, e.primal[i], e.optimistic[i]);
    losses[i] = rec.kernels[i].loss;
  }
  hedge_.update(losses);
  rec.reservoir_accepted = reservoir_->observe(x_id, reservoir_rng_).accepted;
  store_->release(x_id);
  return rec;
}

}  // namespace boks
