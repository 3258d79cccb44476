// Serial reference against OpenMP kernels; thread count is the benchmark argument.
#include "manycolour/construct.hpp"
#include "manycolour/evaluate.hpp"
#include "manycolour/hypergraph.hpp"
#include "manycolour/oracle.hpp"
#include "manycolour/rng.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using namespace manycolour;

namespace {

EdgeColouring random_colouring(std::uint32_t n, std::uint32_t r, std::uint64_t seed) {
  SplitMix64 rng = SplitMix64::stream(seed, 1);
  EdgeColouring c(n, r);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) c.set(u, v, static_cast<Colour>(rng.below(r)));
  return c;
}

void BM_val_f_reference(benchmark::State& state) {
  const auto c = random_colouring(24, 16, 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::val_f(c, 4).value);
}

void BM_val_f(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto c = random_colouring(24, 16, 1);
  for (auto _ : state) benchmark::DoNotOptimize(val_f(c, 4).value);
}

void BM_val_g_reference(benchmark::State& state) {
  const auto c = random_colouring(24, 16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(reference::val_g(c, 4).value);
}

void BM_val_g(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto c = random_colouring(24, 16, 2);
  for (auto _ : state) benchmark::DoNotOptimize(val_g(c, 4).value);
}

void BM_min_edges_reference(benchmark::State& state) {
  const auto h = exclusion_sample(20, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(reference::min_edges_in_subsets(h, 14).t);
}

void BM_min_edges(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  const auto h = exclusion_sample(20, 6, 3);
  for (auto _ : state) benchmark::DoNotOptimize(min_edges_in_subsets(h, 14).t);
}

void BM_exclusion_batch_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::exclusion_sample_batch(16, 7, 0, 16).size());
}

void BM_exclusion_batch(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exclusion_sample_batch(16, 7, 0, 16).size());
}

void BM_oracle_reference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::exact_value(6, 3, 1, Kind::kF).value);
}

void BM_oracle(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(exact_value(6, 3, 1, Kind::kF).value);
}

}  // namespace

BENCHMARK(BM_val_f_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_val_f)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_val_g_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_val_g)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_edges_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_edges)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exclusion_batch_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exclusion_batch)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle_reference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_oracle)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
