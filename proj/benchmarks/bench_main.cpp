#include <benchmark/benchmark.h>

#include "pcompact/adams.hpp"
#include "pcompact/integrality.hpp"
#include "pcompact/v1pi.hpp"

using namespace pcompact;

namespace {

void BM_SnfGroup(benchmark::State& state) {
  const long t = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(snf_group(GroupId::G29, t));
}
BENCHMARK(BM_SnfGroup)->Arg(7)->Arg(127)->Arg(2507)->Unit(benchmark::kMillisecond);

// t = 7 + 4*5^e; larger e means more p-adic precision.
void BM_ExponentAtLargeT(benchmark::State& state) {
  Integer t = 1;
  for (long i = 0; i < state.range(0); ++i) t *= 5;
  t = 7 + 4 * t;
  for (auto _ : state) benchmark::DoNotOptimize(exponent_at(GroupId::G29, t));
}
BENCHMARK(BM_ExponentAtLargeT)->Arg(4)->Arg(20)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_ClosedForm(benchmark::State& state) {
  const auto id = static_cast<GroupId>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(closed_form(id));
}
BENCHMARK(BM_ClosedForm)
    ->Arg(static_cast<int>(GroupId::G29))
    ->Arg(static_cast<int>(GroupId::G34))
    ->Unit(benchmark::kMillisecond);

void BM_AdamsMatrix(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(adams_matrix(GroupId::G34));
}
BENCHMARK(BM_AdamsMatrix)->Unit(benchmark::kMillisecond);

void BM_VerifyCombination(benchmark::State& state) {
  const auto c = listed_combination(GroupId::G29, 4);
  for (auto _ : state) benchmark::DoNotOptimize(verify_combination(c));
}
BENCHMARK(BM_VerifyCombination)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
