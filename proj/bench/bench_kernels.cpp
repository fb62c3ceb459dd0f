// Serial reference vs. OpenMP kernels on complete stores.
//
//   ./bench_kernels --benchmark_filter=Regularity

#include <benchmark/benchmark.h>

#include <map>

#include "vondyck/coset.hpp"
#include "vondyck/kernels.hpp"

using namespace vondyck;
using kernels::Execution;

namespace {

// Dihedral-type D(2,2,c) has order 2c, so c scales the store linearly.
ElementStore const& store_for(int c) {
  static std::map<int, ElementStore> cache;
  auto it = cache.find(c);
  if (it == cache.end()) {
    VonDyckParams const p = c == 5 ? VonDyckParams{2, 3, 5} : VonDyckParams{2, 2, c};
    it = cache.emplace(c, enumerate_elements(GeometricModel{p}, std::nullopt)).first;
  }
  return it->second;
}

template <Execution E>
void BM_MultiplicationTable(benchmark::State& state) {
  auto const& s = store_for(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::multiplication_table(s, E));
  }
  state.counters["elements"] = static_cast<double>(s.size());
}

template <Execution E>
void BM_Regularity(benchmark::State& state) {
  auto const& s = store_for(static_cast<int>(state.range(0)));
  auto const table = kernels::multiplication_table(s, Execution::Parallel);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::regularity_violations(s, table, E));
  }
  state.counters["elements"] = static_cast<double>(s.size());
}

template <Execution E>
void BM_Equivariance(benchmark::State& state) {
  auto const& s = store_for(static_cast<int>(state.range(0)));
  auto const table = kernels::multiplication_table(s, Execution::Parallel);
  auto const incidence = build_coset_geometry(s).incidence(s.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(kernels::equivariance_violations(incidence, table, s.size(), E));
  }
  state.counters["elements"] = static_cast<double>(s.size());
}

void sizes(benchmark::internal::Benchmark* b) {
  // 5 stands for the icosahedral group D(2,3,5).
  for (int c : {5, 250, 1000, 2000}) b->Arg(c);
  b->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_MultiplicationTable<Execution::Serial>)->Apply(sizes);
BENCHMARK(BM_MultiplicationTable<Execution::Parallel>)->Apply(sizes);
BENCHMARK(BM_Regularity<Execution::Serial>)->Apply(sizes);
BENCHMARK(BM_Regularity<Execution::Parallel>)->Apply(sizes);
BENCHMARK(BM_Equivariance<Execution::Serial>)->Apply(sizes);
BENCHMARK(BM_Equivariance<Execution::Parallel>)->Apply(sizes);

BENCHMARK_MAIN();
