#include <benchmark/benchmark.h>

#include "starblock/builders.hpp"
#include "starblock/classifier.hpp"
#include "starblock/oracle.hpp"

namespace {

using namespace starblock;

void BM_ChainPsl2(benchmark::State& state) {
  const auto q = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto built = perm::psl2_action(q);
    benchmark::DoNotOptimize(built.group.order());
  }
}
BENCHMARK(BM_ChainPsl2)->Arg(11)->Arg(32)->Arg(127);

void BM_ChainAlternating(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    auto built = perm::alternating(n);
    benchmark::DoNotOptimize(built.group.order());
  }
}
BENCHMARK(BM_ChainAlternating)->Arg(9)->Arg(20);

void BM_MeasureEdges(benchmark::State& state) {
  const auto built = perm::psl2_action(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(oracle::measure_e_m(built.group, 5));
}
BENCHMARK(BM_MeasureEdges)->Arg(11)->Arg(19);

void BM_Classify(benchmark::State& state) {
  const auto g = catalog::parse_group("PSU(3,16)");
  for (auto _ : state) benchmark::DoNotOptimize(classify::in_Xp(g, 5));
}
BENCHMARK(BM_Classify);

void BM_Sweep(benchmark::State& state) {
  classify::SweepSpec spec;
  spec.families.insert(std::begin(catalog::kAllFamilies), std::end(catalog::kAllFamilies));
  spec.simple_only = true;
  spec.q_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(classify::sweep(spec).size());
}
BENCHMARK(BM_Sweep)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
