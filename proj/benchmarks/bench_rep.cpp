#include <benchmark/benchmark.h>

#include "hopfcert/constructors.hpp"
#include "hopfcert/rep.hpp"

using namespace hopfcert;

namespace {

const char* kGroups[] = {"S3", "D4", "A4", "S4"};

void BM_ChopRegular(benchmark::State& state) {
  const HopfPtr h = group_algebra(builtin_group(kGroups[state.range(0)]), Field::create(5, 1));
  const Module reg = regular_module(h->algebra_ptr());
  for (auto _ : state) benchmark::DoNotOptimize(meataxe_chop(reg, 1));
  state.SetLabel("k" + std::string(kGroups[state.range(0)]) + "/GF(5)");
}
BENCHMARK(BM_ChopRegular)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Radical(benchmark::State& state) {
  const HopfPtr h = group_algebra(builtin_group(kGroups[state.range(0)]), Field::create(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(radical(h->algebra_ptr(), 1));
  state.SetLabel("k" + std::string(kGroups[state.range(0)]) + "/GF(2)");
}
BENCHMARK(BM_Radical)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

void BM_SplittingExtend(benchmark::State& state) {
  const HopfPtr h = group_algebra(builtin_group("C" + std::to_string(state.range(0))), Field::create(2, 1));
  for (auto _ : state) benchmark::DoNotOptimize(splitting_extend(h->algebra_ptr(), 1));
}
BENCHMARK(BM_SplittingExtend)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
