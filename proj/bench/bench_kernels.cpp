// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to vary the
// parallel side.

#include <benchmark/benchmark.h>

#include "cyclicity/checker.hpp"
#include "cyclicity/constructions.hpp"
#include "cyclicity/enumeration.hpp"
#include "cyclicity/kernels.hpp"

namespace cyclicity {
namespace {

const FiniteGroup& witness_table(std::size_t n) {
  static const FiniteGroup w1365 = build_witness(1365, 1365);
  static const FiniteGroup w600 = build_witness(600, 600);
  static const FiniteGroup w200 = build_witness(200);
  return n == 1365 ? w1365 : n == 600 ? w600 : w200;
}

void BM_AssociativitySerial(benchmark::State& state) {
  const FiniteGroup& g = witness_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_associativity_violation_serial(g.table(), g.order()));
  state.SetItemsProcessed(state.iterations() * g.order() * g.order() * g.order());
}

void BM_AssociativityParallel(benchmark::State& state) {
  const FiniteGroup& g = witness_table(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::find_associativity_violation_parallel(g.table(), g.order()));
  state.SetItemsProcessed(state.iterations() * g.order() * g.order() * g.order());
}

void BM_SieveSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::cyclic_number_sieve_serial(static_cast<std::uint64_t>(state.range(0))));
}

void BM_SieveParallel(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(kernels::cyclic_number_sieve_parallel(static_cast<std::uint64_t>(state.range(0))));
}

void BM_Enumerate(benchmark::State& state, Execution exec) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_groups(n, n, exec));
}

void BM_WitnessSweep(benchmark::State& state, Execution exec) {
  const auto top = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_equivalence(0, top, kDefaultEnumerationCap, kDefaultTableCap, exec));
}

BENCHMARK(BM_AssociativitySerial)->Arg(200)->Arg(600)->Arg(1365)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AssociativityParallel)->Arg(200)->Arg(600)->Arg(1365)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveSerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SieveParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, serial, Execution::Serial)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, parallel, Execution::Parallel)->DenseRange(6, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WitnessSweep, serial, Execution::Serial)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_WitnessSweep, parallel, Execution::Parallel)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace cyclicity

BENCHMARK_MAIN();
