#include <benchmark/benchmark.h>

#include "evtsir/evt.hpp"
#include "evtsir/presets.hpp"
#include "evtsir/sirdist.hpp"

namespace {

using namespace evtsir;

void CdfEval(benchmark::State& state) {
  const char* names[] = {"table1-rayleigh-n1", "table1-beta2", "table1-beta3", "table1-beta4"};
  const sirdist::SirDistribution dist(*presets::find(names[state.range(0)]));
  double z = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist.cdf(z).value);
    z = z < 40.0 ? z * 1.07 : 0.11; // sweep the body of the distribution
  }
}
BENCHMARK(CdfEval)->DenseRange(0, 3);

void PdfEval(benchmark::State& state) {
  const char* names[] = {"table1-rayleigh-n1", "table1-beta2", "table1-beta3", "table1-beta4"};
  const sirdist::SirDistribution dist(*presets::find(names[state.range(0)]));
  double z = 0.11;
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist.pdf(z).value);
    z = z < 40.0 ? z * 1.07 : 0.11;
  }
}
BENCHMARK(PdfEval)->DenseRange(0, 3);

void FrechetScale(benchmark::State& state) {
  const sirdist::SirDistribution dist(*presets::find("table1-beta3"));
  long L = 16;
  for (auto _ : state) {
    benchmark::DoNotOptimize(evt::frechet_scale(dist, L));
    L = L < 4096 ? L * 2 : 16;
  }
}
BENCHMARK(FrechetScale);

void LauricellaShells(benchmark::State& state) {
  const std::vector<double> b = {-1.0, 2.0, 1.0, 3.0};
  const std::vector<double> x = {0.25, 0.65, 0.5, 0.1};
  specfun::SeriesControl ctl;
  ctl.max_total_order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::lauricella_fd(1.7, b, 5.0, x, ctl).value);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(LauricellaShells)->RangeMultiplier(2)->Range(32, 512)->Complexity();

} // namespace
