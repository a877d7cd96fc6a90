#include <gtest/gtest.h>

#include <cmath>

#include "boks/kernel.hpp"
#include "fixtures.hpp"

using namespace boks;

TEST(Kernel, GaussianIdentity) {
  auto k = KernelSpec::gaussian(1.0);
  SparseVector x{{1, 0.3}, {2, -0.7}};
  EXPECT_DOUBLE_EQ(eval(k, x, x), 1.0);
  EXPECT_DOUBLE_EQ(k.diagonal_lower_bound(), 1.0);
}

TEST(Kernel, GaussianUnitOffset) {
  auto k = KernelSpec::gaussian(1.0);
  SparseVector x{{1, 1.0}};
  SparseVector z;
  EXPECT_NEAR(eval(k, x, z), 0.606530659712633, 1e-14);
  // sqrt(2 - 2 exp(-0.5)), evaluated at 50 digits.
  EXPECT_NEAR(feature_distance(k, x, z), 0.887095643419994, 1e-12);
}

TEST(Kernel, PolynomialOrthogonal) {
  auto k = KernelSpec::polynomial(2);
  SparseVector e1{{1, 1.0}}, e2{{2, 1.0}};
  EXPECT_DOUBLE_EQ(eval(k, e1, e2), 0.0);
  EXPECT_DOUBLE_EQ(eval(k, e1, e1), 1.0);
}

TEST(Kernel, DistanceLimits) {
  auto k = KernelSpec::gaussian(0.5);
  SparseVector x{{3, 2.0}};
  EXPECT_EQ(feature_distance(k, x, x), 0.0);
  SparseVector far{{3, 1e4}};
  EXPECT_NEAR(feature_distance(k, x, far), std::sqrt(2.0), 1e-12);
}

TEST(Kernel, DistanceMatchesKernelIdentity) {
  std::mt19937_64 rng(11);
  for (double sigma : {0.25, 1.0, 4.0}) {
    auto k = KernelSpec::gaussian(sigma);
    for (int t = 0; t < 1000; ++t) {
      auto x = fixture::random_vector(rng, 8);
      auto z = fixture::random_vector(rng, 8);
      const double d = feature_distance(k, x, z);
      const double want = eval(k, x, x) + eval(k, z, z) - 2.0 * eval(k, x, z);
      EXPECT_LE(std::abs(d * d - want), 1e-12);
    }
  }
}

TEST(Kernel, SymmetricBoundedAndTriangle) {
  std::mt19937_64 rng(12);
  auto k = KernelSpec::gaussian(1.0);
  for (int t = 0; t < 1000; ++t) {
    auto a = fixture::random_vector(rng, 6);
    auto b = fixture::random_vector(rng, 6);
    auto c = fixture::random_vector(rng, 6);
    const double ab = eval(k, a, b);
    EXPECT_EQ(ab, eval(k, b, a));
    EXPECT_GT(ab, 0.0);
    EXPECT_LE(ab, 1.0);
    EXPECT_LE(feature_distance(k, a, c), feature_distance(k, a, b) + feature_distance(k, b, c) + 1e-9);
  }
}

TEST(Kernel, Describe) {
  EXPECT_EQ(KernelSpec::gaussian(0.25).describe(), "gaussian(sigma=0.25)");
  EXPECT_EQ(KernelSpec::polynomial(2).describe(), "polynomial(degree=2)");
}
