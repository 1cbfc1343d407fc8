#include <benchmark/benchmark.h>

#include <loopkit/catalog.hpp>
#include <loopkit/identity_check.hpp>
#include <loopkit/isomorphism.hpp>
#include <loopkit/models.hpp>
#include <loopkit/report.hpp>
#include <loopkit/search.hpp>

namespace {

using namespace loopkit;

void BM_EnumerateAllLoops(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_EnumerateAllLoops)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_EnumerateLeftCheban(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<int>(state.range(0));
  spec.constraints = {catalog_identity("left_cheban")};
  spec.mode = SearchMode::up_to_isomorphism;
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_EnumerateLeftCheban)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);

void BM_EnumerateCC(benchmark::State& state) {
  SearchSpec spec;
  spec.order = static_cast<int>(state.range(0));
  const auto& lcc = catalog_identity("lcc");
  spec.constraints = {lcc, mirror(lcc)};
  for (auto _ : state) benchmark::DoNotOptimize(count(spec));
}
BENCHMARK(BM_EnumerateCC)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

void BM_CanonicalForm(benchmark::State& state) {
  const auto l = models::example_3_3();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(l));
}
BENCHMARK(BM_CanonicalForm);

void BM_Analyze(benchmark::State& state) {
  const auto l = state.range(0) == 8 ? models::example_3_3() : models::heisenberg_27();
  for (auto _ : state) benchmark::DoNotOptimize(analyze(l));
}
BENCHMARK(BM_Analyze)->Arg(8)->Arg(27)->Unit(benchmark::kMicrosecond);

void BM_HoldsLeftCheban(benchmark::State& state) {
  const auto h = models::heisenberg_27();
  const auto& id = catalog_identity("left_cheban");
  for (auto _ : state) benchmark::DoNotOptimize(holds(h, id));
}
BENCHMARK(BM_HoldsLeftCheban)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
