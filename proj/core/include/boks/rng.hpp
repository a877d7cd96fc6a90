#pragma once

#include <cstdint>
#include <random>

namespace boks {

// Independent generator for stream `index` under a master seed.
inline std::mt19937_64 make_stream(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), 0x6b736f62u};
  return std::mt19937_64(seq);
}

// Bernoulli(p) draw via one uniform; p <= 0 never fires, p >= 1 always does.
inline bool draw_bernoulli(std::mt19937_64& rng, double p) {
  if (p <= 0.0) return false;
  if (p >= 1.0) return true;
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

}  // namespace boks
