#include <benchmark/benchmark.h>

#include "hermquad/motives.hpp"
#include "hermquad/quadforms.hpp"
#include "hermquad/rost.hpp"

namespace {

using namespace hermquad;

void BM_KrashenSweep(benchmark::State& state) {
  const auto top = state.range(0);
  for (auto _ : state) {
    bool all = true;
    for (std::int64_t n = 2; n <= top; ++n) all = all && verify_krashen(n).holds;
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_KrashenSweep)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_SolveNh(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(solve_nh(state.range(0)));
}
BENCHMARK(BM_SolveNh)->Arg(10)->Arg(100)->Arg(1000);

void BM_CongruenceSweep(benchmark::State& state) {
  const auto top = state.range(0);
  for (auto _ : state) {
    bool all = true;
    for (std::int64_t n = 2; n <= top; ++n) all = all && congrel_equivalence(n);
    benchmark::DoNotOptimize(all);
  }
}
BENCHMARK(BM_CongruenceSweep)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_GlobalWittIndex(benchmark::State& state) {
  const auto q = DiagonalQuadraticForm::from_integers({3, -5, 7, 11, -13, 30, -2, 1});
  for (auto _ : state) benchmark::DoNotOptimize(global_witt_index(q));
}
BENCHMARK(BM_GlobalWittIndex);

void BM_TraceFormCheck(benchmark::State& state) {
  const HermitianSpace h(SquareClass::of(-7), {Rational(3), Rational(-5), Rational(2), Rational(9)});
  const auto q = trace_form(h);
  for (auto _ : state) benchmark::DoNotOptimize(milnor_husemoller_check(q, h.a()));
}
BENCHMARK(BM_TraceFormCheck);

}  // namespace
BENCHMARK_MAIN();
