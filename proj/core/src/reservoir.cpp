#include "boks/reservoir.hpp"

#include <algorithm>

#include "boks/error.hpp"

namespace boks {

Reservoir::Reservoir(std::size_t capacity, std::size_t archive_cap, std::vector<KernelSpec> kernels,
                     std::shared_ptr<ExampleStore> store)
    : capacity_(capacity),
      archive_cap_(archive_cap),
      kernels_(std::move(kernels)),
      store_(std::move(store)),
      gram_sum_(kernels_.size(), 0.0) {
  if (capacity_ == 0) throw ConfigError("reservoir capacity must be positive");
  if (archive_cap_ == 0) throw ConfigError("reservoir archive cap must be positive");
  if (!store_) throw Error("reservoir needs an example store");
  sample_.reserve(capacity_);
}

Reservoir::~Reservoir() {
  for (ExampleId id : sample_) store_->release(id);
  for (ExampleId id : archive_) store_->release(id);
}

double Reservoir::signed_sum(std::size_t kernel, const SparseVector& x) const {
  double s = 0.0;
  for (const Example* ex : sample_examples_) s += ex->y * eval(kernels_[kernel], ex->x, x);
  return s;
}

ReservoirInsertion Reservoir::observe(ExampleId id, std::mt19937_64& rng) {
  ++seen_;
  ReservoirInsertion report;
  if (frozen_) return report;

  report.probability = std::min(1.0, static_cast<double>(capacity_) / static_cast<double>(seen_));
  if (report.probability < 1.0) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (unit(rng) >= report.probability) return report;
  }
  report.accepted = true;

  const Example& incoming = store_->get(id);
  store_->retain(id);
  archive_.push_back(id);

  if (sample_.size() < capacity_) {
    for (std::size_t i = 0; i < kernels_.size(); ++i) {
      gram_sum_[i] += 2.0 * incoming.y * signed_sum(i, incoming.x) + eval(kernels_[i], incoming.x, incoming.x);
    }
    store_->retain(id);
    sample_.push_back(id);
    sample_examples_.push_back(&incoming);
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, sample_.size() - 1);
    const std::size_t slot = pick(rng);
    const Example& outgoing = *sample_examples_[slot];
    for (std::size_t i = 0; i < kernels_.size(); ++i) {
      const KernelSpec& k = kernels_[i];
      // Remove the outgoing row/column, then add the incoming one.
      const double out_row = signed_sum(i, outgoing.x) - outgoing.y * eval(k, outgoing.x, outgoing.x);
      gram_sum_[i] -= 2.0 * outgoing.y * out_row + eval(k, outgoing.x, outgoing.x);
      const double in_row = signed_sum(i, incoming.x) - outgoing.y * eval(k, outgoing.x, incoming.x);
      gram_sum_[i] += 2.0 * incoming.y * in_row + eval(k, incoming.x, incoming.x);
    }
    report.evicted = true;
    report.evicted_id = sample_[slot];
    store_->release(sample_[slot]);
    store_->retain(id);
    sample_[slot] = id;
    sample_examples_[slot] = &incoming;
  }

  if (archive_.size() >= archive_cap_) frozen_ = true;
  return report;
}

double Reservoir::optimistic_value(std::size_t kernel, const SparseVector& x) const {
  if (sample_.empty()) return 0.0;
  return -signed_sum(kernel, x) / static_cast<double>(sample_.size());
}

double Reservoir::optimistic_sq_norm(std::size_t kernel) const {
  if (sample_.empty()) return 0.0;
  const double n = static_cast<double>(sample_.size());
  return std::max(0.0, gram_sum_[kernel]) / (n * n);
}

std::vector<std::pair<ExampleId, double>> Reservoir::optimistic_coeffs() const {
  std::vector<std::pair<ExampleId, double>> out;
  out.reserve(sample_.size());
  const double n = static_cast<double>(sample_.size());
  for (std::size_t j = 0; j < sample_.size(); ++j) {
    out.emplace_back(sample_[j], -sample_examples_[j]->y / n);
  }
  return out;
}

double Reservoir::recompute_optimistic_sq_norm(std::size_t kernel) const {
  if (sample_.empty()) return 0.0;
  double s = 0.0;
  for (const Example* a : sample_examples_) {
    for (const Example* b : sample_examples_) s += a->y * b->y * eval(kernels_[kernel], a->x, b->x);
  }
  const double n = static_cast<double>(sample_.size());
  return std::max(0.0, s) / (n * n);
}

}  // namespace boks
