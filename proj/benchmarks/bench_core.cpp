#include <benchmark/benchmark.h>

#include "boks/kernel.hpp"
#include "boks/momd_hinge.hpp"
#include "boks/momd_smooth.hpp"
#include "boks/raker.hpp"
#include "fixtures.hpp"

using namespace boks;

namespace {

const std::vector<KernelSpec>& grid() {
  static const std::vector<KernelSpec> k{KernelSpec::gaussian(0.25), KernelSpec::gaussian(1), KernelSpec::gaussian(4),
                                         KernelSpec::gaussian(16), KernelSpec::gaussian(64)};
  return k;
}

}  // namespace

// Sparse gaussian evaluation at mushrooms-like density (~22 of 112 features).
static void BM_GaussianEval(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto dim = static_cast<std::size_t>(state.range(0));
  auto x = fixture::random_vector(rng, dim, 0.2);
  auto z = fixture::random_vector(rng, dim, 0.2);
  const auto k = KernelSpec::gaussian(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(eval(k, x, z));
}
BENCHMARK(BM_GaussianEval)->Arg(112)->Arg(1000);

// Steady-state cost of one M-OMD-H round with full buffers.
static void BM_HingeRound(benchmark::State& state) {
  auto ds = fixture::blobs(20000, 20, 0.15, 1.0, 2);
  HingeLearnerConfig c;
  c.kernels = grid();
  c.budget = static_cast<std::size_t>(state.range(0));
  c.horizon = ds.size();
  MomdHinge m(c);
  std::size_t t = 0;
  for (; t < 4000; ++t) m.update(ds.examples[t].x, ds.examples[t].y);
  for (auto _ : state) {
    const auto& ex = ds.examples[t++ % ds.size()];
    benchmark::DoNotOptimize(m.update(ex.x, ex.y));
  }
}
BENCHMARK(BM_HingeRound)->Arg(100)->Arg(400);

static void BM_SmoothRound(benchmark::State& state) {
  auto ds = fixture::blobs(20000, 20, 0.15, 1.0, 3);
  SmoothLearnerConfig c;
  c.kernels = grid();
  c.budget = static_cast<std::size_t>(state.range(0));
  MomdSmooth m(c);
  std::size_t t = 0;
  for (; t < 4000; ++t) m.update(ds.examples[t].x, ds.examples[t].y);
  for (auto _ : state) {
    const auto& ex = ds.examples[t++ % ds.size()];
    benchmark::DoNotOptimize(m.update(ex.x, ex.y));
  }
}
BENCHMARK(BM_SmoothRound)->Arg(100)->Arg(400);

static void BM_RakerRound(benchmark::State& state) {
  auto ds = fixture::blobs(20000, 20, 0.15, 1.0, 4);
  RakerConfig c;
  c.sigmas = {0.25, 1, 4, 16, 64};
  c.dimension = 20;
  c.features = static_cast<std::size_t>(state.range(0));
  Raker r(c);
  std::size_t t = 0;
  for (auto _ : state) {
    const auto& ex = ds.examples[t++ % ds.size()];
    benchmark::DoNotOptimize(r.update(ex.x, ex.y));
  }
}
BENCHMARK(BM_RakerRound)->Arg(400);

BENCHMARK_MAIN();
