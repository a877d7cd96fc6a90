#pragma once

#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "boks/example_store.hpp"
#include "boks/kernel.hpp"

namespace boks {

enum class HalfToKeep { oldest, newest };

// f = sum_j beta_j kappa(x_j, .) over examples held in a shared store.
//
// The function tracks two things separately: its coefficient support and
// its own buffer (the insertion-ordered examples charged to its memory
// budget). Updates that anchor on reservoir examples add support outside
// the buffer; those atoms are budgeted elsewhere. ||f||^2 is cached and
// maintained incrementally; split_half() recomputes it exactly.
class BudgetedFunction {
 public:
  struct Atom {
    ExampleId id;
    double coeff;
    const Example* example;
  };

  BudgetedFunction(KernelSpec kernel, std::shared_ptr<ExampleStore> store);
  BudgetedFunction(const BudgetedFunction& other);
  BudgetedFunction& operator=(const BudgetedFunction& other);
  BudgetedFunction(BudgetedFunction&& other) noexcept;
  BudgetedFunction& operator=(BudgetedFunction&& other) noexcept;
  ~BudgetedFunction();

  const KernelSpec& kernel() const noexcept { return kernel_; }
  const ExampleStore& store() const noexcept { return *store_; }

  double evaluate(const SparseVector& x) const;

  // f <- f + c * kappa(x_anchor, .)
  void add_scaled(double c, ExampleId anchor);

  // f <- f + sum_k c_k kappa(x_{id_k}, .), with one exact norm update.
  // Anchors must be distinct.
  void add_combination(std::span<const std::pair<ExampleId, double>> terms);

  // Scales f onto the ball of radius `radius` if it lies outside. Returns
  // true when a rescale happened.
  bool project_ball(double radius);

  // Appends an example to the own buffer (the example must be in the store).
  void push_buffer(ExampleId id);

  // Drops half of the own buffer by insertion order. Coefficients on the
  // dropped ids are deleted; support outside the buffer stays. Throws
  // BudgetError if the buffer size is odd or zero.
  std::vector<ExampleId> split_half(HalfToKeep keep);

  // Resets to the zero function with an empty buffer (restart removal).
  void clear();

  double squared_norm() const noexcept { return sq_norm_; }
  double norm() const noexcept;

  // O(n^2) Gram recomputation; does not touch the cache.
  double recompute_squared_norm() const;

  const std::vector<ExampleId>& own_buffer() const noexcept { return buffer_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  double coefficient(ExampleId id) const noexcept;

 private:
  Atom* find_atom(ExampleId id) noexcept;
  void erase_atom(ExampleId id);
  void retain_all();
  void release_all() noexcept;

  KernelSpec kernel_;
  std::shared_ptr<ExampleStore> store_;
  std::vector<Atom> atoms_;
  std::vector<ExampleId> buffer_;
  double sq_norm_ = 0.0;
};

}  // namespace boks
