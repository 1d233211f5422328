// Serial reference loops against the OpenMP kernels. Run with
// OMP_NUM_THREADS set to compare thread counts.

#include <benchmark/benchmark.h>

#include "majdet/formulas.hpp"
#include "majdet/repr.hpp"

using namespace majdet;

namespace {

Execution exec_of(const benchmark::State& state) {
  return state.range(1) == 0 ? Execution::serial : Execution::parallel;
}

void BM_RegularTableBuild(benchmark::State& state) {
  const SymmetricGroup grp(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(RegularTable::build(grp, Weight<Permutation>(weight_maj), exec_of(state)));
  }
}

void BM_DetModular(benchmark::State& state) {
  const SymmetricGroup grp(static_cast<int>(state.range(0)));
  const RegularTable table = RegularTable::build(grp, Weight<Permutation>(weight_maj));
  const ModPrime field;
  const auto points = random_points({Var::q()}, {});
  for (auto _ : state) benchmark::DoNotOptimize(table.det_mod(points.front(), field, exec_of(state)));
}

void BM_DetBareiss(benchmark::State& state) {
  const SymmetricGroup grp(static_cast<int>(state.range(0)));
  const PolyMatrix m = RegularTable::build(grp, Weight<Permutation>(weight_maj)).symbolic();
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m, exec_of(state)));
}

}  // namespace

BENCHMARK(BM_RegularTableBuild)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetModular)->ArgsProduct({{5, 6}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DetBareiss)->ArgsProduct({{3, 4}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
