#include <benchmark/benchmark.h>

#include "pbc/homology.hpp"
#include "pbc/matroid.hpp"
#include "pbc/pbcomplex.hpp"
#include "pbc/presentations.hpp"
#include "pbc/quillen.hpp"
#include "pbc/whitehead.hpp"

using namespace pbc;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::parallel : Exec::serial; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) ? "parallel" : "serial"); }

void BM_VerifyRelations(benchmark::State& state) {
  const auto fams = theorem_families(Theorem::T2_11);
  for (auto _ : state) benchmark::DoNotOptimize(verify_presentation(Theorem::T2_11, fams, 4, 0, exec_of(state)));
  label(state);
}
BENCHMARK(BM_VerifyRelations)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Homology(benchmark::State& state) {
  const auto k = build_truncated_pb(3, 2).complex;
  for (auto _ : state) benchmark::DoNotOptimize(reduced_homology(k, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Homology)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QuillenSuite(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_quillen_suite(20240611, 30, exec_of(state)));
  label(state);
}
BENCHMARK(BM_QuillenSuite)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BuildPB(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_truncated_pb(3, 2, -1, exec_of(state)));
  label(state);
}
BENCHMARK(BM_BuildPB)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Stabilizer(benchmark::State& state) {
  const auto u = parse_tuple("a", 3);
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_presentation(u, exec_of(state)));
  label(state);
}
BENCHMARK(BM_Stabilizer)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
