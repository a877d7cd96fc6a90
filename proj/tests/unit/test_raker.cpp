#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "boks/error.hpp"
#include "boks/kernel.hpp"
#include "boks/raker.hpp"
#include "fixtures.hpp"

using namespace boks;

namespace {

RakerConfig config(std::size_t dim, std::uint64_t seed = 1) {
  RakerConfig c;
  c.sigmas = {0.5, 2.0};
  c.features = 100;
  c.dimension = dim;
  c.seed = seed;
  return c;
}

double dotv(const std::vector<double>& a, const std::vector<double>& b) {
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

}  // namespace

TEST(Raker, FeatureNormIsOne) {
  Raker r(config(5));
  std::mt19937_64 rng(71);
  for (int t = 0; t < 100; ++t) {
    auto x = fixture::random_vector(rng, 5);
    for (std::size_t i = 0; i < 2; ++i) {
      auto z = r.features(i, x);
      EXPECT_EQ(z.size(), 200u);
      EXPECT_NEAR(dotv(z, z), 1.0, 1e-12);
    }
  }
}

TEST(Raker, BochnerMonteCarlo) {
  SparseVector x{{1, 0.3}, {2, -0.4}}, xp{{1, -0.2}, {3, 0.5}};
  for (double sigma : {0.5, 1.0, 2.0}) {
    std::vector<double> draws;
    for (std::uint64_t s = 0; s < 200; ++s) {
      auto c = config(3, s);
      c.sigmas = {sigma};
      Raker r(c);
      draws.push_back(dotv(r.features(0, x), r.features(0, xp)));
    }
    auto [mean, se] = fixture::mean_se(draws);
    EXPECT_LE(std::abs(mean - eval(KernelSpec::gaussian(sigma), x, xp)), 3.0 * se) << "sigma " << sigma;
  }
}

TEST(Raker, ZeroStepNeverMoves) {
  auto c = config(4);
  c.step = 0.0;
  Raker r(c);
  auto ds = fixture::blobs(100, 4, 0.5, 0.5, 1);
  for (const auto& ex : ds.examples) r.update(ex.x, ex.y);
  for (std::size_t i = 0; i < 2; ++i)
    for (double v : r.theta(i)) EXPECT_EQ(v, 0.0);
}

TEST(Raker, OneHingeStep) {
  auto c = config(3);
  c.sigmas = {1.0};
  c.step = 0.1;
  Raker r(c);
  SparseVector x{{2, 0.7}};
  auto z = r.features(0, x);
  r.update(x, -1);
  for (std::size_t j = 0; j < z.size(); ++j) EXPECT_NEAR(r.theta(0)[j], 0.1 * -1 * z[j], 1e-15);
}

TEST(Raker, WeightsTrackCumulativeLoss) {
  auto c = config(4);
  c.step = 0.05;
  Raker r(c);
  auto ds = fixture::blobs(300, 4, 0.5, 0.5, 2);
  for (const auto& ex : ds.examples) {
    r.update(ex.x, ex.y);
    const auto& w = r.weights();
    EXPECT_NEAR(w[0] + w[1], 1.0, 1e-12);
    const auto& cl = r.cumulative_loss();
    if (cl[0] != cl[1]) EXPECT_EQ(w[0] > w[1], cl[0] < cl[1]);
  }
}

TEST(Raker, SeparableBlobs) {
  auto ds = fixture::blobs(2000, 5, 1.0, 0.3, 3);
  auto c = config(5);
  c.step = 1.0 / std::sqrt(2000.0) * 10.0;
  Raker r(c);
  std::size_t mistakes = 0;
  for (const auto& ex : ds.examples) mistakes += r.update(ex.x, ex.y).mistake;
  EXPECT_LE(100.0 * mistakes / 2000.0, 5.0);
}

TEST(Raker, DeterministicFrequencies) {
  SparseVector x{{1, 0.5}};
  Raker a(config(2, 9)), b(config(2, 9)), c(config(2, 10));
  EXPECT_EQ(a.features(1, x), b.features(1, x));
  EXPECT_NE(a.features(1, x), c.features(1, x));
}

TEST(Raker, RejectsOutOfRangeFeature) {
  Raker r(config(2));
  EXPECT_THROW(r.features(0, SparseVector{{3, 1.0}}), ConfigError);
}
