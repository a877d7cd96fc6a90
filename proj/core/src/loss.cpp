#include "boks/loss.hpp"

#include <cmath>
#include <string>

#include "boks/error.hpp"

namespace boks {

LossKind parse_loss_kind(std::string_view name) {
  if (name == "hinge") return LossKind::hinge;
  if (name == "logistic") return LossKind::logistic;
  throw ConfigError("unknown loss '" + std::string(name) + "' (expected hinge or logistic)");
}

std::string_view to_string(LossKind kind) {
  return kind == LossKind::hinge ? "hinge" : "logistic";
}

double HingeLoss::value(double u, Label y) {
  check_label(y);
  const double m = 1.0 - y * u;
  return m > 0.0 ? m : 0.0;
}

double HingeLoss::deriv(double u, Label y) {
  check_label(y);
  return y * u < 1.0 ? -static_cast<double>(y) : 0.0;
}

namespace {

double logistic_value(double u, Label y) {
  const double m = y * u;
  if (m >= 0.0) return std::log1p(std::exp(-m));
  return -m + std::log1p(std::exp(m));
}

double logistic_deriv(double u, Label y) {
  const double m = y * u;
  // -y / (1 + e^m), evaluated without overflow for large |m|.
  if (m >= 0.0) {
    const double e = std::exp(-m);
    return -y * e / (1.0 + e);
  }
  return -y / (1.0 + std::exp(m));
}

}  // namespace

double SmoothLoss::value(double u, Label y) const {
  check_label(y);
  return value_fn(u, y);
}

double SmoothLoss::deriv(double u, Label y) const {
  check_label(y);
  return deriv_fn(u, y);
}

SmoothLoss logistic_loss() { return SmoothLoss{"logistic", &logistic_value, &logistic_deriv, 1.0, 1.0}; }

double loss_value(LossKind kind, double u, Label y) {
  return kind == LossKind::hinge ? HingeLoss::value(u, y) : logistic_loss().value(u, y);
}

double loss_deriv(LossKind kind, double u, Label y) {
  return kind == LossKind::hinge ? HingeLoss::deriv(u, y) : logistic_loss().deriv(u, y);
}

}  // namespace boks
