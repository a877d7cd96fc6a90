#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "boks/example.hpp"

namespace boks {

// Step-size rule for the per-kernel mirror steps.
//   experimental: lambda = c * U / sqrt(B)
//   theoretical:  hinge lambda = U sqrt(K) / sqrt(2B); smooth lambda = 2U / (G1 sqrt(B))
enum class LambdaMode { experimental, theoretical };

// What happens to a full buffer when a new example must go in.
//   half:    drop half of the buffer and project the rest onto the ball
//   restart: reset the hypothesis to zero
enum class RemovalMode { half, restart };

LambdaMode parse_lambda_mode(std::string_view name);
RemovalMode parse_removal_mode(std::string_view name);
std::string_view to_string(LambdaMode mode);
std::string_view to_string(RemovalMode mode);

// sign with sign(0) = +1
inline Label sign_label(double v) noexcept { return v >= 0.0 ? 1 : -1; }

struct Prediction {
  std::vector<double> per_kernel;
  double aggregate = 0.0;
  Label label = 1;
};

// Per-kernel outcome of one round.
enum class Branch {
  no_loss,    // zero gradient
  proxy,      // a buffered example stood in for x
  skipped,    // sampled b = 0
  inserted,   // sampled b = 1, buffer had room
  removed,    // sampled b = 1 at a full buffer
};

std::string_view to_string(Branch b);

struct KernelRound {
  double value = 0.0;        // f_{t,i}(x_t)
  double loss = 0.0;         // expert loss fed to hedge
  Branch branch = Branch::no_loss;
  double probability = 0.0;  // P[b = 1] when sampled
  double gap_sq = 0.0;       // ||grad - optimistic grad||^2 (hinge)
};

struct RoundRecord {
  std::uint64_t round = 0;
  Prediction prediction;
  Label y = 1;
  bool mistake = false;
  double loss = 0.0;  // task loss of the aggregate prediction
  std::vector<KernelRound> kernels;
  bool reservoir_accepted = false;
};

}  // namespace boks
