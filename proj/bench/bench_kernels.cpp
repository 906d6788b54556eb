// Serial reference vs OpenMP kernel, pairwise. Thread count follows
// OMP_NUM_THREADS.

#include <benchmark/benchmark.h>

#include "cmult/group_oracle.hpp"
#include "cmult/number_theory.hpp"
#include "cmult/partition.hpp"
#include "cmult/sym_alt.hpp"

namespace {

using namespace cmult;

void BM_ReportSerial(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity_report_serial(GroupKind::Alt, n));
}
void BM_ReportParallel(benchmark::State& state) {
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(multiplicity_report(GroupKind::Alt, n));
}
BENCHMARK(BM_ReportSerial)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReportParallel)->Arg(40)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(static_cast<std::uint64_t>(state.range(0))));
}
void BM_EnumerateParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_partitions_parallel(static_cast<std::uint64_t>(state.range(0))));
  }
}
BENCHMARK(BM_EnumerateSerial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_TotientScanSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(totient_bound_check_serial(static_cast<std::uint64_t>(state.range(0))));
}
void BM_TotientScanParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(totient_bound_check(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_TotientScanSerial)->Arg(1'000'000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TotientScanParallel)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_CommutingSerial(benchmark::State& state) {
  const PermGroup g = symmetric_group(7);
  const Permutation x = Permutation::from_cycles(7, {{0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(count_commuting_serial(g, x));
}
void BM_CommutingParallel(benchmark::State& state) {
  const PermGroup g = symmetric_group(7);
  const Permutation x = Permutation::from_cycles(7, {{0, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(count_commuting(g, x));
}
BENCHMARK(BM_CommutingSerial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_CommutingParallel)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
