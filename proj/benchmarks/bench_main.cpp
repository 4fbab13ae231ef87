#include "torusdual/duality.hpp"
#include "torusdual/fixtures.hpp"
#include "torusdual/homology.hpp"
#include "torusdual/intlin.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace torusdual;

namespace {

IntMatrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-20, 20);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = entry(rng);
  return m;
}

void BM_Snf(benchmark::State& state) {
  const IntMatrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(snf(m));
}
BENCHMARK(BM_Snf)->Arg(8)->Arg(16)->Arg(30);

// Fresh complex per iteration so the matrix caches do not hide the work.
void BM_BarCohomology(benchmark::State& state) {
  const GroupPtr g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(static_cast<std::size_t>(state.range(0))));
  const GModule m = GModule::trivial_free(g, 1);
  for (auto _ : state) {
    BarComplex bar(m, 3);
    benchmark::DoNotOptimize(bar.tate(3).group());
  }
}
BENCHMARK(BM_BarCohomology)->Arg(2)->Arg(4)->Arg(6);

void BM_Theorem1(benchmark::State& state, const char* name) {
  const TorusFixture f = builtin_fixture(name);
  for (auto _ : state) {
    DualityContext ctx(f);
    benchmark::DoNotOptimize(verify_theorem1(ctx).pass());
  }
}
BENCHMARK_CAPTURE(BM_Theorem1, c2_split, "c2-split");
BENCHMARK_CAPTURE(BM_Theorem1, c3, "c3");

}  // namespace
BENCHMARK_MAIN();
