#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "boks/error.hpp"
#include "boks/hedge.hpp"

using namespace boks;

namespace {
double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }
}  // namespace

TEST(Hedge, StartsUniform) {
  Hedge h(5);
  for (double p : h.distribution()) EXPECT_DOUBLE_EQ(p, 0.2);
  EXPECT_NEAR(h.learning_rate(), std::sqrt(2.0 * std::log(5.0)), 1e-15);
}

TEST(Hedge, OneUpdateHandValues) {
  Hedge h(2);
  const std::vector<double> c{0.0, 1.0};
  h.update(c);
  EXPECT_DOUBLE_EQ(h.second_moment(), 0.5);
  EXPECT_NEAR(h.learning_rate(), 0.961351257733922, 1e-12);
  EXPECT_NEAR(h.distribution()[0], 0.72339226785045, 1e-10);
  EXPECT_NEAR(h.distribution()[1], 0.27660773214955, 1e-10);
}

TEST(Hedge, TwoRoundReplay) {
  Hedge h(2);
  h.update(std::vector<double>{0.0, 1.0});
  h.update(std::vector<double>{1.0, 0.0});
  EXPECT_EQ(h.cumulative_loss(), (std::vector<double>{1.0, 1.0}));
  EXPECT_NEAR(h.second_moment(), 1.22339226785045, 1e-10);
  EXPECT_NEAR(h.distribution()[0], 0.5, 1e-15);
  EXPECT_EQ(h.rounds(), 2u);
}

TEST(Hedge, ZeroAndIdenticalLossesKeepDistribution) {
  Hedge h(4);
  h.update(std::vector<double>{0.3, 0.0, 0.1, 0.2});
  const auto before = h.distribution();
  h.update(std::vector<double>(4, 0.0));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(h.distribution()[i], before[i], 1e-15);

  Hedge u(3);
  for (int t = 0; t < 100; ++t) u.update(std::vector<double>(3, 0.7));
  for (double p : u.distribution()) EXPECT_EQ(p, 1.0 / 3.0);
}

TEST(Hedge, RejectsBadLosses) {
  Hedge h(2);
  EXPECT_THROW(h.update(std::vector<double>{-0.1, 0.0}), NumericError);
  EXPECT_THROW(h.update(std::vector<double>{NAN, 0.0}), NumericError);
  EXPECT_THROW(h.update(std::vector<double>{0.0}), Error);
}

TEST(Hedge, SimplexMonotoneMomentAndLeader) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  Hedge h(6);
  double prev = 0.0;
  for (int t = 0; t < 3000; ++t) {
    std::vector<double> c(6);
    for (auto& v : c) v = u(rng);
    c[2] *= 0.5;
    h.update(c);
    EXPECT_NEAR(sum(h.distribution()), 1.0, 1e-12);
    for (double p : h.distribution()) EXPECT_GE(p, 0.0);
    EXPECT_GE(h.second_moment(), prev);
    prev = h.second_moment();
  }
  const auto& cl = h.cumulative_loss();
  EXPECT_EQ(h.leader(), static_cast<std::size_t>(std::min_element(cl.begin(), cl.end()) - cl.begin()));
  EXPECT_EQ(h.leader(), 2u);
}

TEST(Hedge, LeaderTiesGoLow) {
  Hedge h(3);
  EXPECT_EQ(h.leader(), 0u);
  h.update(std::vector<double>{1.0, 0.0, 0.0});
  EXPECT_EQ(h.leader(), 1u);
}

TEST(Hedge, PermutationInvariance) {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<std::size_t> perm{3, 0, 4, 1, 2};
  Hedge a(5), b(5);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> c(5), pc(5);
    for (auto& v : c) v = u(rng);
    for (std::size_t i = 0; i < 5; ++i) pc[i] = c[perm[i]];
    a.update(c);
    b.update(pc);
    for (std::size_t i = 0; i < 5; ++i) ASSERT_NEAR(b.distribution()[i], a.distribution()[perm[i]], 1e-12);
  }
}

TEST(Hedge, NoUnderflowOnHugeLosses) {
  Hedge h(2);
  for (int t = 0; t < 1000; ++t) h.update(std::vector<double>{1e3, 0.0});
  EXPECT_NEAR(sum(h.distribution()), 1.0, 1e-12);
  EXPECT_EQ(h.leader(), 1u);
  for (double p : h.distribution()) EXPECT_TRUE(std::isfinite(p));
}

TEST(Hedge, RegretOracle) {
  std::mt19937_64 rng(23);
  const std::size_t K = 5, T = 2000;
  for (int seq = 0; seq < 50; ++seq) {
    std::uniform_real_distribution<double> u(0.0, 1.0 + seq % 4);
    Hedge h(K);
    double learner = 0.0, max_c = 0.0;
    std::vector<double> total(K, 0.0);
    for (std::size_t t = 0; t < T; ++t) {
      std::vector<double> c(K);
      for (std::size_t i = 0; i < K; ++i) {
        c[i] = u(rng) * (i == static_cast<std::size_t>(seq) % K ? 0.7 : 1.0);
        max_c = std::max(max_c, c[i]);
        total[i] += c[i];
      }
      for (std::size_t i = 0; i < K; ++i) learner += h.distribution()[i] * c[i];
      h.update(c);
    }
    const double lmin = *std::min_element(total.begin(), total.end());
    const double lnk = std::log(double(K));
    const double bound = 3.0 / std::sqrt(2.0) * std::sqrt(max_c * lmin * lnk) + 4.5 * max_c * lnk;
    EXPECT_LE(learner - lmin, bound) << "sequence " << seq;
  }
}

TEST(ExponentialWeights, Softmax) {
  auto w = exponential_weights(std::vector<double>{0.0, std::log(3.0)}, 1.0);
  EXPECT_NEAR(w[0], 0.75, 1e-15);
  EXPECT_NEAR(w[1], 0.25, 1e-15);
  auto big = exponential_weights(std::vector<double>{1e6, 1e6 + 1.0}, 1.0);
  EXPECT_NEAR(big[0], 1.0 / (1.0 + std::exp(-1.0)), 1e-12);
}
