#pragma once

#include <string>

#include "boks/sparse_vector.hpp"

namespace boks {

enum class KernelKind { gaussian, polynomial };

// One candidate kernel. Gaussian kernels have kappa(x, x) = 1, so the
// lower bound k1 on the diagonal is 1 for the whole candidate grid.
struct KernelSpec {
  KernelKind kind = KernelKind::gaussian;
  double sigma = 1.0;  // gaussian bandwidth
  int degree = 1;      // polynomial exponent

  static KernelSpec gaussian(double sigma);
  static KernelSpec polynomial(int degree);

  // Lower bound on eval(x, x) over unit-scale inputs (1 for gaussian).
  double diagonal_lower_bound() const noexcept;

  std::string describe() const;

  friend bool operator==(const KernelSpec&, const KernelSpec&) = default;
};

double eval(const KernelSpec& spec, const SparseVector& x, const SparseVector& z) noexcept;

// Distance between the feature maps, ||kappa(x,.) - kappa(z,.)||_H.
double feature_distance(const KernelSpec& spec, const SparseVector& x, const SparseVector& z) noexcept;

}  // namespace boks
