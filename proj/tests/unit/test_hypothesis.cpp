#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <memory>

#include "boks/budgeted_function.hpp"
#include "boks/error.hpp"
#include "fixtures.hpp"

using namespace boks;

namespace {

struct Bench {
  std::shared_ptr<ExampleStore> store = std::make_shared<ExampleStore>();
  KernelSpec k = KernelSpec::gaussian(1.0);
  std::mt19937_64 rng{5};

  // Adds an example and hands the caller's reference over to `keep`.
  ExampleId add(SparseVector x, Label y = 1) {
    auto id = store->add(Example{std::move(x), y});
    held.push_back(id);
    return id;
  }
  ExampleId add_random() { return add(fixture::random_vector(rng, 5)); }
  ~Bench() {
    for (auto id : held) store->release(id);
  }
  std::vector<ExampleId> held;
};

double gram_norm(const BudgetedFunction& f) {
  double s = 0.0;
  for (const auto& a : f.atoms())
    for (const auto& b : f.atoms()) s += a.coeff * b.coeff * eval(f.kernel(), a.example->x, b.example->x);
  return s;
}

double rel_err(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

}  // namespace

TEST(Hypothesis, EvaluateZeroAndSingleAtom) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  SparseVector x{{1, 0.4}};
  EXPECT_EQ(f.evaluate(x), 0.0);
  EXPECT_EQ(f.squared_norm(), 0.0);
  auto id = b.add(x);
  f.add_scaled(1.0, id);
  EXPECT_DOUBLE_EQ(f.evaluate(x), 1.0);
  EXPECT_DOUBLE_EQ(f.squared_norm(), 1.0);
}

TEST(Hypothesis, EvaluateBruteForce) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  auto x1 = b.add_random(), x2 = b.add_random();
  f.add_scaled(0.5, x1);
  f.add_scaled(-0.25, x2);
  auto x3 = fixture::random_vector(b.rng, 5);
  const double want =
      0.5 * eval(b.k, b.store->get(x1).x, x3) - 0.25 * eval(b.k, b.store->get(x2).x, x3);
  EXPECT_NEAR(f.evaluate(x3), want, 1e-14);
}

TEST(Hypothesis, AddThenSubtractRestores) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  for (int j = 0; j < 5; ++j) f.add_scaled(0.3 * (j + 1), b.add_random());
  const double before = f.squared_norm();
  const auto atoms = std::vector<BudgetedFunction::Atom>(f.atoms().begin(), f.atoms().end());
  auto a = b.add_random();
  f.add_scaled(0.7, a);
  f.add_scaled(-0.7, a);
  EXPECT_NEAR(f.squared_norm(), before, 1e-10);
  ASSERT_EQ(f.atoms().size(), atoms.size());
  for (std::size_t j = 0; j < atoms.size(); ++j) EXPECT_NEAR(f.coefficient(atoms[j].id), atoms[j].coeff, 1e-12);
}

TEST(Hypothesis, IncrementalNormMatchesGram) {
  Bench b;
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    BudgetedFunction f(b.k, b.store);
    std::vector<ExampleId> ids;
    for (int j = 0; j < 20; ++j) {
      ids.push_back(b.add_random());
      f.add_scaled(u(b.rng), ids.back());
    }
    f.add_scaled(u(b.rng), ids[b.rng() % ids.size()]);
    EXPECT_LE(rel_err(f.squared_norm(), gram_norm(f)), 1e-8);
    EXPECT_LE(rel_err(f.recompute_squared_norm(), gram_norm(f)), 1e-12);
  }
}

TEST(Hypothesis, AddCombinationMatchesSequentialAdds) {
  Bench b;
  BudgetedFunction f(b.k, b.store), g(b.k, b.store);
  std::vector<std::pair<ExampleId, double>> terms;
  for (int j = 0; j < 6; ++j) {
    auto id = b.add_random();
    f.add_scaled(0.2 * j - 0.5, id);
    g.add_scaled(0.2 * j - 0.5, id);
    if (j % 2 == 0) terms.emplace_back(id, 0.1 * j + 0.05);
  }
  terms.emplace_back(b.add_random(), -0.4);
  f.add_combination(terms);
  for (auto [id, c] : terms) g.add_scaled(c, id);
  EXPECT_NEAR(f.squared_norm(), g.squared_norm(), 1e-12);
  EXPECT_LE(rel_err(f.squared_norm(), gram_norm(f)), 1e-10);
}

TEST(Hypothesis, ProjectInsideBallIsNoop) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  f.add_scaled(0.5, b.add_random());
  EXPECT_FALSE(f.project_ball(1.0));
  EXPECT_DOUBLE_EQ(f.norm(), 0.5);
}

TEST(Hypothesis, ProjectScalesSingleAtom) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  auto id = b.add_random();
  f.add_scaled(2.0, id);
  EXPECT_TRUE(f.project_ball(1.0));
  EXPECT_NEAR(f.coefficient(id), 1.0, 1e-15);
}

// The projection is the argmin of ||g - f|| over the ball. Competitors are
// random functions on the same atoms plus a fresh one, rescaled into the ball.
TEST(Hypothesis, ProjectionIsNearestPointInBall) {
  Bench b;
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  const double radius = 1.0;
  BudgetedFunction f(b.k, b.store);
  std::vector<ExampleId> ids;
  for (int j = 0; j < 8; ++j) {
    ids.push_back(b.add_random());
    f.add_scaled(u(b.rng), ids.back());
  }
  ids.push_back(b.add_random());
  ASSERT_GT(f.norm(), radius);
  BudgetedFunction proj = f;
  proj.project_ball(radius);
  EXPECT_NEAR(std::sqrt(proj.recompute_squared_norm()), radius, 1e-8);

  auto dist_sq = [&](const BudgetedFunction& g) {
    BudgetedFunction diff = g;
    for (const auto& a : f.atoms()) diff.add_scaled(-a.coeff, a.id);
    return diff.recompute_squared_norm();
  };
  const double best = dist_sq(proj);
  for (int trial = 0; trial < 1000; ++trial) {
    BudgetedFunction g(b.k, b.store);
    for (auto id : ids) g.add_scaled(u(b.rng), id);
    g.project_ball(radius * std::uniform_real_distribution<double>(0.0, 1.0)(b.rng));
    ASSERT_LE(best, dist_sq(g) + 1e-9);
  }
}

TEST(Hypothesis, ProjectIdempotentAndNonExpanding) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  for (int j = 0; j < 10; ++j) f.add_scaled(1.5, b.add_random());
  const double n0 = f.norm();
  f.project_ball(2.0);
  const double n1 = f.norm();
  EXPECT_LE(n1, n0);
  f.project_ball(2.0);
  EXPECT_DOUBLE_EQ(f.norm(), n1);
}

TEST(Hypothesis, SplitHalfOrder) {
  Bench b;
  for (auto keep : {HalfToKeep::oldest, HalfToKeep::newest}) {
    BudgetedFunction f(b.k, b.store);
    std::vector<ExampleId> ids;
    for (int j = 0; j < 4; ++j) {
      ids.push_back(b.add_random());
      f.add_scaled(1.0, ids.back());
      f.push_buffer(ids.back());
    }
    auto outside = b.add_random();
    f.add_scaled(0.3, outside);
    auto removed = f.split_half(keep);
    if (keep == HalfToKeep::oldest) {
      EXPECT_EQ(f.own_buffer(), (std::vector<ExampleId>{ids[0], ids[1]}));
      EXPECT_EQ(removed, (std::vector<ExampleId>{ids[2], ids[3]}));
    } else {
      EXPECT_EQ(f.own_buffer(), (std::vector<ExampleId>{ids[2], ids[3]}));
      EXPECT_EQ(removed, (std::vector<ExampleId>{ids[0], ids[1]}));
    }
    for (auto id : removed) EXPECT_EQ(f.coefficient(id), 0.0);
    EXPECT_EQ(f.coefficient(outside), 0.3);  // support outside the buffer stays
    EXPECT_LE(rel_err(f.squared_norm(), gram_norm(f)), 1e-12);
  }
}

TEST(Hypothesis, SplitRejectsOddOrEmpty) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  EXPECT_THROW(f.split_half(HalfToKeep::oldest), BudgetError);
  auto id = b.add_random();
  f.push_buffer(id);
  EXPECT_THROW(f.split_half(HalfToKeep::oldest), BudgetError);
}

TEST(Hypothesis, NormDriftUnderRandomOps) {
  Bench b;
  BudgetedFunction f(b.k, b.store);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ExampleId> pool;
  for (int j = 0; j < 60; ++j) pool.push_back(b.add_random());
  for (int op = 0; op < 1000; ++op) {
    const auto r = b.rng() % 10;
    if (r < 7) {
      const auto id = pool[b.rng() % pool.size()];
      f.add_scaled(u(b.rng), id);
      const auto& buf = f.own_buffer();
      if (std::find(buf.begin(), buf.end(), id) == buf.end()) f.push_buffer(id);
    } else if (r < 9) {
      f.project_ball(2.0);
    } else if (f.own_buffer().size() >= 2) {
      if (f.own_buffer().size() % 2 == 1) {
        // Make the buffer even with a fresh anchor.
        auto id = b.add_random();
        f.add_scaled(0.1, id);
        f.push_buffer(id);
      }
      f.split_half(op % 2 ? HalfToKeep::oldest : HalfToKeep::newest);
    }
  }
  EXPECT_LE(rel_err(f.squared_norm(), f.recompute_squared_norm()), 1e-6);
}

TEST(Hypothesis, RefcountConservation) {
  Bench b;
  std::vector<ExampleId> pool;
  for (int j = 0; j < 10; ++j) pool.push_back(b.add_random());
  {
    BudgetedFunction f(b.k, b.store);
    f.add_scaled(1.0, pool[0]);
    f.push_buffer(pool[0]);
    f.add_scaled(0.5, pool[1]);
    BudgetedFunction g = f;
    g.add_scaled(0.2, pool[2]);
    g.push_buffer(pool[3]);

    std::map<ExampleId, std::size_t> expected;
    for (auto id : b.held) expected[id] += 1;
    for (const BudgetedFunction* h : {&f, &g}) {
      for (const auto& a : h->atoms()) expected[a.id] += 1;
      for (auto id : h->own_buffer()) expected[id] += 1;
    }
    std::size_t total = 0;
    for (auto [id, n] : expected) {
      EXPECT_EQ(b.store->refcount(id), n) << "id " << id;
      total += n;
    }
    EXPECT_EQ(b.store->total_refcount(), total);
  }
  for (auto id : pool) EXPECT_EQ(b.store->refcount(id), 1u);
}

TEST(ExampleStore, DropsAtZero) {
  ExampleStore s;
  auto a = s.add(Example{SparseVector{{1, 1.0}}, 1});
  auto c = s.add(Example{SparseVector{}, -1});
  EXPECT_LT(a, c);
  s.retain(a);
  s.release(a);
  EXPECT_TRUE(s.contains(a));
  s.release(a);
  EXPECT_FALSE(s.contains(a));
  EXPECT_EQ(s.size(), 1u);
  auto d = s.add(Example{SparseVector{}, 1});
  EXPECT_GT(d, c);  // ids are never reused
}
