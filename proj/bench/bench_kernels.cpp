// Serial reference vs OpenMP kernels on the catalog arrays and a Kronecker
// product. Run with OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "dta/catalog.hpp"
#include "dta/construct.hpp"
#include "dta/kernels.hpp"
#include "dta/locate.hpp"
#include "dta/verify.hpp"

namespace {

const dta::MixedArray& table1() {
  static const auto a = dta::catalog_get("table1").document->array;
  return a;
}
const dta::MixedArray& example34() {
  static const auto a = dta::catalog_get("example34").document->array;
  return a;
}
const dta::MixedArray& kron() {
  static const auto a = dta::kronecker(table1(), table1());
  return a;
}

dta::Exec exec_of(const benchmark::State& state) {
  return state.range(0) ? dta::Exec::parallel : dta::Exec::serial;
}

void BM_coverage_kron(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dta::kernels::coverage(kron(), 2, std::uint64_t{1} << 28, exec_of(state)));
}

void BM_extension_cover_kron(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dta::kernels::first_extension_cover(kron(), 2, 3, exec_of(state)));
}

void BM_extension_cover_example34(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dta::kernels::first_extension_cover(example34(), 2, 2, exec_of(state)));
}

void BM_brute_example34(benchmark::State& state) {
  auto table = dta::build_interaction_table(example34(), 2, dta::Exec::serial);
  for (auto _ : state)
    benchmark::DoNotOptimize(
        dta::kernels::first_detection_violation(table, 2, exec_of(state)));
}

void BM_table_kron(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(dta::build_interaction_table(kron(), 2, exec_of(state)));
}

void BM_locate_table1(benchmark::State& state) {
  std::vector<dta::Interaction> fault{dta::Interaction{{0, 0}, {2, 0}}};
  auto y = dta::simulate_outcome(table1(), fault);
  for (auto _ : state)
    benchmark::DoNotOptimize(dta::locate_faults(table1(), 1, 2, y, exec_of(state)));
}

}  // namespace

// Argument: 0 = serial, 1 = OpenMP.
BENCHMARK(BM_coverage_kron)->Arg(0)->Arg(1);
BENCHMARK(BM_extension_cover_kron)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extension_cover_example34)->Arg(0)->Arg(1);
BENCHMARK(BM_brute_example34)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_kron)->Arg(0)->Arg(1);
BENCHMARK(BM_locate_table1)->Arg(0)->Arg(1);
BENCHMARK_MAIN();
