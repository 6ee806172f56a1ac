#include <benchmark/benchmark.h>

#include "shacert/cubicsurface.hpp"
#include "shacert/localsolve.hpp"
#include "shacert/weilpoly.hpp"

using namespace shacert;

static void BM_DiscriminantInterpolated(benchmark::State& state) {
  const auto fam = family_model1();
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_interpolated(fam));
}
BENCHMARK(BM_DiscriminantInterpolated)->Unit(benchmark::kMillisecond);

static void BM_DiscriminantElimination(benchmark::State& state) {
  const auto fam = family_model1();
  for (auto _ : state) benchmark::DoNotOptimize(discriminant_elimination(fam));
}
BENCHMARK(BM_DiscriminantElimination)->Unit(benchmark::kMillisecond);

static void BM_IrreducibilityWitness(benchmark::State& state) {
  const auto delta = discriminant(family_model1());
  for (auto _ : state) benchmark::DoNotOptimize(irreducible_over_Q_certificate(delta));
}
BENCHMARK(BM_IrreducibilityWitness)->Unit(benchmark::kMillisecond);

static void BM_CountPoints(benchmark::State& state) {
  const auto F = fq_make(static_cast<std::uint64_t>(state.range(0)));
  const auto c = specialize_fiber(F, Chart::Model1, F.from_int(std::int64_t{-1}));
  for (auto _ : state) benchmark::DoNotOptimize(count_points(c));
}
BENCHMARK(BM_CountPoints)->Arg(27)->Arg(81)->Arg(343)->Arg(1009);

static void BM_LocalSweep(benchmark::State& state) {
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_localdivisors(jobs));
}
BENCHMARK(BM_LocalSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_AbsolutelySimple(benchmark::State& state) {
  const WeilPoly w{3, {-3, 7, -9, 9}};
  for (auto _ : state) benchmark::DoNotOptimize(absolutely_simple(w));
}
BENCHMARK(BM_AbsolutelySimple);

static void BM_RationalSearch(benchmark::State& state) {
  const auto s = DiagonalCubic::cassels_guy();
  for (auto _ : state) benchmark::DoNotOptimize(rational_search(s, state.range(0)));
}
BENCHMARK(BM_RationalSearch)->Arg(25)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
