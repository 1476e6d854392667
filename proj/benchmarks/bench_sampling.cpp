#include <benchmark/benchmark.h>

#include "evtsir/fading.hpp"
#include "evtsir/montecarlo.hpp"
#include "evtsir/presets.hpp"

namespace {

using namespace evtsir;

void PhiloxU64(benchmark::State& state) {
  mc::RandomStream s(1);
  for (auto _ : state) benchmark::DoNotOptimize(s.next_u64());
}
BENCHMARK(PhiloxU64);

void GammaVariate(benchmark::State& state) {
  mc::RandomStream s(2);
  const double shape = static_cast<double>(state.range(0)) / 10.0;
  for (auto _ : state) benchmark::DoNotOptimize(s.gamma(shape));
}
BENCHMARK(GammaVariate)->Arg(5)->Arg(10)->Arg(35);

void PowerDraw(benchmark::State& state) {
  const char* names[] = {"table1-rayleigh-n1", "table1-beta3", "fig-fas-n2"};
  const auto scenario = *presets::find(names[state.range(0)]);
  mc::RandomStream s(3);
  for (auto _ : state) benchmark::DoNotOptimize(fading::sample_power(scenario.source, s));
}
BENCHMARK(PowerDraw)->DenseRange(0, 2);

void SirDraw(benchmark::State& state) {
  const char* names[] = {"table1-rayleigh-n1", "table1-beta3", "fig-fas-n2"};
  const auto scenario = *presets::find(names[state.range(0)]);
  mc::RandomStream s(4);
  for (auto _ : state) benchmark::DoNotOptimize(fading::sample_sir(scenario, s));
}
BENCHMARK(SirDraw)->DenseRange(0, 2);

void MaximaStudyThroughput(benchmark::State& state) {
  const auto scenario = *presets::find("table1-beta3");
  const long L = state.range(0);
  for (auto _ : state) {
    mc::MaximaStudy study{scenario, L, 2000, 42};
    benchmark::DoNotOptimize(mc::run_maxima_study(study, 0));
  }
  state.SetItemsProcessed(state.iterations() * 2000 * L);
}
BENCHMARK(MaximaStudyThroughput)->Arg(16)->Arg(64);

} // namespace
