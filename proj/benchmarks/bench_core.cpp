#include <benchmark/benchmark.h>

#include "liegeo/catalog.hpp"
#include "liegeo/filiform.hpp"
#include "liegeo/random.hpp"
#include "liegeo/search.hpp"

using namespace liegeo;

static void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Rng rng(1);
  const Matrix m = random_invertible(rng, n);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(4)->Arg(8)->Arg(12);

static void BM_Jacobi(benchmark::State& state) {
  const LieAlgebra g = standard_filiform(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify_jacobi(g));
}
BENCHMARK(BM_Jacobi)->Arg(6)->Arg(10);

static void BM_TotallyGeodesic(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Cd2f c = cd2f_construction(n);
  const MetricLieAlgebra mg(c.algebra, c.metric);
  for (auto _ : state) benchmark::DoNotOptimize(totally_geodesic_fast(mg, c.h.space()));
}
BENCHMARK(BM_TotallyGeodesic)->Arg(6)->Arg(10);

static void BM_VergneBasis(benchmark::State& state) {
  Rng rng(2);
  const LieAlgebra g = change_basis(dim6_example(), random_invertible(rng, 6));
  for (auto _ : state) benchmark::DoNotOptimize(vergne_basis(g));
}
BENCHMARK(BM_VergneBasis);

static void BM_NumericGeodesic(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const MetricLieAlgebra mg(standard_filiform(n), Metric(random_spd_gram(rng, n)));
  for (auto _ : state) benchmark::DoNotOptimize(find_geodesic_numeric(mg, SearchBudget{}));
}
BENCHMARK(BM_NumericGeodesic)->Arg(4)->Arg(7)->Unit(benchmark::kMillisecond);

static void BM_SearchL6(benchmark::State& state) {
  const MetricLieAlgebra mg(standard_filiform(6));
  SearchBudget b;
  b.max_candidates = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(search_tg_subalgebras(mg, 3, b));
}
BENCHMARK(BM_SearchL6)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
