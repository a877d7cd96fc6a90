#pragma once

#include <string_view>

#include "boks/example.hpp"

namespace boks {

enum class LossKind { hinge, logistic };

LossKind parse_loss_kind(std::string_view name);
std::string_view to_string(LossKind kind);

// max(0, 1 - y u). The subgradient at the kink y u = 1 is 0.
struct HingeLoss {
  static double value(double u, Label y);
  static double deriv(double u, Label y);
};

// A loss satisfying |l'(u, y)| <= g1 and |l'(u, y)| <= g2 * l(u, y).
struct SmoothLoss {
  using Fn = double (*)(double, Label);

  std::string_view name;
  Fn value_fn;
  Fn deriv_fn;
  double g1;
  double g2;

  double value(double u, Label y) const;
  double deriv(double u, Label y) const;
};

// ln(1 + exp(-y u)) with g1 = g2 = 1.
SmoothLoss logistic_loss();

double loss_value(LossKind kind, double u, Label y);
double loss_deriv(LossKind kind, double u, Label y);

}  // namespace boks
