#include <benchmark/benchmark.h>

#include <string>

#include "vknot/composition.hpp"
#include "vknot/volume.hpp"

using namespace vknot;

namespace {

// Alternating 2n-crossing code on the torus family used in the tests, doubled
// up to the requested size by repeated splicing.
Diagram chain(int copies) {
  const Diagram base = parse("O1+U3+O2+U4+O3+U5+O4+U6+O5+U1+O6+U2+");
  Diagram d = base;
  for (int k = 1; k < copies; ++k) d = splice(d, Arc{0, 0}, base, Arc{0, 0});
  return d;
}

void BM_TraceFaces(benchmark::State& state) {
  const Diagram d = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(trace_faces(d));
  state.SetComplexityN(static_cast<long>(d.crossing_count()));
}
BENCHMARK(BM_TraceFaces)->RangeMultiplier(2)->Range(1, 64)->Complexity();

void BM_WeaklyPrime(benchmark::State& state) {
  const Diagram d = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(is_weakly_prime(d));
  state.SetComplexityN(static_cast<long>(d.crossing_count()));
}
BENCHMARK(BM_WeaklyPrime)->RangeMultiplier(2)->Range(1, 8)->Complexity();

void BM_Splice(benchmark::State& state) {
  const Diagram d = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(splice(d, Arc{0, 3}, d, Arc{0, 5}));
}
BENCHMARK(BM_Splice)->RangeMultiplier(4)->Range(1, 64);

void BM_AddTwists(benchmark::State& state) {
  const Diagram d = chain(4);
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(add_twists(d, Arc{0, 2}, n));
}
BENCHMARK(BM_AddTwists)->Arg(1)->Arg(4)->Arg(16);

void BM_Sequence(benchmark::State& state) {
  const Triple t1(parse("O1+U3+O2+U4+O3+U5+O4+U6+O5+U1+O6+U2+"), Cork{{0, 0}});
  const Triple t2(parse("O1-U6-O2-U1-O3-U2-O4-U3-O5-U4-O6-U5-"), Cork{{0, 0}});
  const int i = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(infinite_volume_sequence(t1, t2, i, 2));
}
BENCHMARK(BM_Sequence)->Arg(1)->Arg(3)->Arg(6);

void BM_TetConstant(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(tet_volume_constant());
}
BENCHMARK(BM_TetConstant);

}  // namespace
BENCHMARK_MAIN();
