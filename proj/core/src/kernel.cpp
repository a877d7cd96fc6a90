#include "boks/kernel.hpp"

#include <cmath>
#include <sstream>

#include "boks/error.hpp"

namespace boks {

KernelSpec KernelSpec::gaussian(double sigma) {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    throw ConfigError("gaussian kernel needs a positive finite sigma");
  }
  return KernelSpec{KernelKind::gaussian, sigma, 1};
}

KernelSpec KernelSpec::polynomial(int degree) {
  if (degree < 1) throw ConfigError("polynomial kernel needs degree >= 1");
  return KernelSpec{KernelKind::polynomial, 1.0, degree};
}

double KernelSpec::diagonal_lower_bound() const noexcept {
  // Polynomial kernels have no positive diagonal bound in general; the
  // generator that uses them only feeds unit vectors, where kappa(x,x) = 1.
  return 1.0;
}

std::string KernelSpec::describe() const {
  std::ostringstream os;
  if (kind == KernelKind::gaussian) {
    os << "gaussian(sigma=" << sigma << ")";
  } else {
    os << "polynomial(degree=" << degree << ")";
  }
  return os.str();
}

double eval(const KernelSpec& spec, const SparseVector& x, const SparseVector& z) noexcept {
  switch (spec.kind) {
    case KernelKind::gaussian:
      return std::exp(-squared_distance(x, z) / (2.0 * spec.sigma * spec.sigma));
    case KernelKind::polynomial: {
      const double d = dot(x, z);
      double r = 1.0;
      for (int k = 0; k < spec.degree; ++k) r *= d;
      return r;
    }
  }
  return 0.0;
}

double feature_distance(const KernelSpec& spec, const SparseVector& x, const SparseVector& z) noexcept {
  if (&x == &z) return 0.0;
  const double r = eval(spec, x, x) + eval(spec, z, z) - 2.0 * eval(spec, x, z);
  return r > 0.0 ? std::sqrt(r) : 0.0;
}

}  // namespace boks
