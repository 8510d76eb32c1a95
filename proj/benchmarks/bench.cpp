#include <benchmark/benchmark.h>

#include "tricut/fixtures.hpp"
#include "tricut/hypertree.hpp"
#include "tricut/verify.hpp"

using namespace tricut;

namespace {

void BM_enumerate_cutsets_wheel(benchmark::State& state) {
  Graph g = gen_wheel(unsigned(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_cutsets(g));
}
BENCHMARK(BM_enumerate_cutsets_wheel)->Arg(6)->Arg(16)->Arg(32)->Arg(63);

void BM_enumerate_cutsets_random(benchmark::State& state) {
  Graph g = gen_random_triconnected(unsigned(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_cutsets(g));
}
BENCHMARK(BM_enumerate_cutsets_random)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

void BM_classify_complexes(benchmark::State& state) {
  Graph g = gen_random_triconnected(unsigned(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(classify_complexes(g));
}
BENCHMARK(BM_classify_complexes)->Arg(8)->Arg(12)->Arg(16);

void BM_build_hypertree(benchmark::State& state) {
  Graph g = gen_random_triconnected(unsigned(state.range(0)), 7);
  for (auto _ : state)
    benchmark::DoNotOptimize(build_hypertree(g));
}
BENCHMARK(BM_build_hypertree)->Arg(8)->Arg(12)->Arg(16);

void BM_verify_fixture(benchmark::State& state, const char* name) {
  Graph g = fixture(name);
  for (auto _ : state)
    benchmark::DoNotOptimize(verify_graph(g));
}
BENCHMARK_CAPTURE(BM_verify_fixture, wheel6, "WHEEL6");
BENCHMARK_CAPTURE(BM_verify_fixture, dk4, "DK4");
BENCHMARK_CAPTURE(BM_verify_fixture, y3, "Y3");

}  // namespace

BENCHMARK_MAIN();
