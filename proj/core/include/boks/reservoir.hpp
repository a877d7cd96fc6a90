#pragma once

#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "boks/example_store.hpp"
#include "boks/kernel.hpp"

namespace boks {

struct ReservoirInsertion {
  bool accepted = false;
  bool evicted = false;
  ExampleId evicted_id = 0;
  double probability = 0.0;
};

// Uniform sample V of at most `capacity` stream examples, plus the
// append-only archive of every example that ever entered V. The archive is
// hard-capped: once it holds `archive_cap` ids the reservoir freezes and
// stops accepting.
//
// The sample defines the optimistic gradient estimate
//   g_i = -(1/|V|) sum_{(x,y) in V} y kappa_i(x, .)
// for each kernel; ||g_i||^2 is kept up to date on every insertion.
class Reservoir {
 public:
  Reservoir(std::size_t capacity, std::size_t archive_cap, std::vector<KernelSpec> kernels,
            std::shared_ptr<ExampleStore> store);
  Reservoir(const Reservoir&) = delete;
  Reservoir& operator=(const Reservoir&) = delete;
  ~Reservoir();

  // Offers the example for round seen()+1 with probability min(1, M/t).
  ReservoirInsertion observe(ExampleId id, std::mt19937_64& rng);

  // g_i(x); 0 while V is empty.
  double optimistic_value(std::size_t kernel, const SparseVector& x) const;
  double optimistic_sq_norm(std::size_t kernel) const;
  // {id_j -> -y_j / |V|}
  std::vector<std::pair<ExampleId, double>> optimistic_coeffs() const;

  // O(M^2) recomputation of sum_{j,k} y_j y_k kappa_i(x_j, x_k) / |V|^2.
  double recompute_optimistic_sq_norm(std::size_t kernel) const;

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t archive_cap() const noexcept { return archive_cap_; }
  const std::vector<ExampleId>& sample() const noexcept { return sample_; }
  const std::vector<ExampleId>& archive() const noexcept { return archive_; }
  std::size_t seen() const noexcept { return seen_; }
  bool frozen() const noexcept { return frozen_; }

 private:
  // sum_{j in V} y_j kappa_i(x_j, x)
  double signed_sum(std::size_t kernel, const SparseVector& x) const;

  std::size_t capacity_;
  std::size_t archive_cap_;
  std::vector<KernelSpec> kernels_;
  std::shared_ptr<ExampleStore> store_;
  std::vector<ExampleId> sample_;
  std::vector<const Example*> sample_examples_;
  std::vector<ExampleId> archive_;
  std::vector<double> gram_sum_;  // per kernel, unnormalised
  std::size_t seen_ = 0;
  bool frozen_ = false;
};

}  // namespace boks
