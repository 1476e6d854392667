#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "evtsir/errors.hpp"
#include "evtsir/metrics.hpp"
#include "evtsir/presets.hpp"
#include "evtsir/stats.hpp"

using namespace evtsir;
using evt::FrechetParams;
using metrics::FasConfig;

namespace {
constexpr double kLn2 = 0.6931471805599453;
}

TEST_CASE("outage_asymptotic is the Frechet CDF at the threshold") {
  const FrechetParams fp{19.0, 1.0, 20};
  CHECK(metrics::outage_asymptotic(fp, 19.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
  CHECK(metrics::outage_asymptotic(fp, 1e12) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(metrics::outage_asymptotic(fp, 0.0), std::domain_error);

  // full chain: a_L from the exact CDF
  const auto fp2 = evt::frechet_params(*presets::find("table1-rayleigh-n1"), 20);
  CHECK(metrics::outage_asymptotic(fp2, 19.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
}

TEST_CASE("outage_exact_mc matches the closed-form power") {
  const auto scenario = *presets::find("table1-rayleigh-n1");
  // F(19)^20 = 0.95^20
  const double want = std::pow(0.95, 20.0);
  const auto est = metrics::outage_exact_mc(scenario, 20, 19.0, 400000, 99);
  CHECK(std::abs(est.value - want) <= 3.0 * est.std_error);
  CHECK(est.std_error > 0.0);

  // far-left threshold: all maxima exceed it
  const auto zero = metrics::outage_exact_mc(scenario, 20, 1e-9, 10000, 99);
  CHECK(zero.value == 0.0);
}

TEST_CASE("ergodic_rate_asymptotic against the Frechet sampling oracle") {
  const FrechetParams fp{19.0, 1.0, 20};
  const double rate = metrics::ergodic_rate_asymptotic(fp);

  mc::RandomStream rng(808);
  const long n = 2000000;
  double acc = 0.0;
  for (long i = 0; i < n; ++i) {
    const double z = fp.scale * std::pow(rng.exponential(), -1.0 / fp.shape);
    acc += std::log1p(z) / kLn2;
  }
  const double oracle = acc / static_cast<double>(n);
  CHECK(std::abs(rate - oracle) / oracle < 0.005);
}

TEST_CASE("ergodic_rate_asymptotic properties") {
  // degenerate scale: rate collapses
  CHECK(metrics::ergodic_rate_asymptotic({1e-12, 2.0, 4}) < 1e-9);
  // monotone in the scale at fixed shape
  CHECK(metrics::ergodic_rate_asymptotic({10.0, 2.0, 4}) >
        metrics::ergodic_rate_asymptotic({5.0, 2.0, 4}));
  // finite for shape <= 1 (log moment exists even when the mean diverges)
  const double r = metrics::ergodic_rate_asymptotic({3.0, 0.9, 4});
  CHECK(std::isfinite(r));
  CHECK(r > 0.0);
  // stable under node doubling once converged
  quadrature::QuadratureControl a;
  a.max_levels = 9;
  quadrature::QuadratureControl b;
  b.max_levels = 10;
  const double ra = metrics::ergodic_rate_asymptotic({19.0, 1.0, 20}, a);
  const double rb = metrics::ergodic_rate_asymptotic({19.0, 1.0, 20}, b);
  CHECK(std::abs(ra - rb) <= 1e-8 * std::abs(rb));
}

TEST_CASE("ergodic_rate_mc closed form at L=1 and growth in L") {
  const auto scenario = *presets::find("table1-rayleigh-n1");
  const auto est = metrics::ergodic_rate_mc(scenario, 1, 200000, 5);
  CHECK(std::abs(est.value - 1.0 / kLn2) <= 3.0 * est.std_error);

  const auto est8 = metrics::ergodic_rate_mc(scenario, 8, 50000, 6);
  const auto est64 = metrics::ergodic_rate_mc(scenario, 64, 50000, 7);
  CHECK(est8.value > est.value);
  CHECK(est64.value > est8.value);
}

TEST_CASE("sample_top_order_stats is strictly decreasing with the Frechet margin") {
  const FrechetParams fp{2.0, 1.5, 64};
  mc::RandomStream rng(1101);
  for (int i = 0; i < 200; ++i) {
    const auto v = metrics::sample_top_order_stats(fp, 5, rng);
    REQUIRE(v.size() == 5);
    for (size_t k = 1; k < v.size(); ++k) CHECK(v[k] < v[k - 1]);
  }

  // Ls = 1 marginal is exactly Frechet(a, beta)
  std::vector<double> tops(1000000);
  for (auto& t : tops) t = metrics::sample_top_order_stats(fp, 1, rng)[0];
  const double ks =
      stats::ks_distance(tops, [&](double z) { return evt::frechet_cdf(fp, z); });
  CHECK(ks <= 0.002);
}

TEST_CASE("fas_rate_upper_bound reduces to the ergodic rate at Ls=1") {
  const FrechetParams fp{10.0, 2.0, 128};
  FasConfig cfg{128, 1, 400000};
  const auto ub = metrics::fas_rate_upper_bound(fp, cfg, 42);
  const double rate = metrics::ergodic_rate_asymptotic(fp);
  CHECK(std::abs(ub.value - rate) <= 3.0 * ub.std_error);
}

TEST_CASE("fas_rate_upper_bound grows with diminishing returns in Ls") {
  const FrechetParams fp{10.0, 2.0, 128};
  std::vector<double> bounds;
  for (long ls = 1; ls <= 5; ++ls) {
    FasConfig cfg{128, ls, 200000};
    bounds.push_back(metrics::fas_rate_upper_bound(fp, cfg, 4242).value);
  }
  for (size_t i = 1; i < bounds.size(); ++i) CHECK(bounds[i] > bounds[i - 1]);
  for (size_t i = 2; i < bounds.size(); ++i)
    CHECK(bounds[i] - bounds[i - 1] < bounds[i - 1] - bounds[i - 2]);
}

TEST_CASE("fas_simulated_rate: exchangeability at Ls = L and growth in Ls") {
  const auto scenario = *presets::find("table1-rayleigh-n1");
  FasConfig all{4, 4, 50000};
  const auto sum_all = metrics::fas_simulated_rate(scenario, all, 17);
  const auto single = metrics::ergodic_rate_mc(scenario, 1, 200000, 18);
  CHECK(std::abs(sum_all.value - 4.0 * single.value) <=
        3.0 * std::sqrt(sum_all.std_error * sum_all.std_error +
                        16.0 * single.std_error * single.std_error));

  FasConfig two{4, 2, 50000};
  CHECK(metrics::fas_simulated_rate(scenario, two, 17).value < sum_all.value);
}

TEST_CASE("asymptotic bound dominates the simulated FAS rate") {
  const auto scenario = *presets::find("fig-fas-n1");
  const long L = 64;
  const auto fp = evt::frechet_params(scenario, L);
  FasConfig cfg{L, 4, 30000};
  const auto ub = metrics::fas_rate_upper_bound(fp, cfg, 90);
  const auto sim = metrics::fas_simulated_rate(scenario, cfg, 91);
  const double sigma = std::sqrt(ub.std_error * ub.std_error + sim.std_error * sim.std_error);
  CHECK(ub.value - sim.value >= -3.0 * sigma);
}

TEST_CASE("FasConfig validation") {
  FasConfig bad{1, 1, 100};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {8, 9, 100};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = {8, 0, 100};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
