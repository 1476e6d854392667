#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "evtsir/random_stream.hpp"
#include "evtsir/stats.hpp"

using namespace evtsir;

TEST_CASE("ecdf step values") {
  const std::vector<double> s = {1.0, 2.0, 3.0, 4.0, 5.0};
  CHECK(stats::ecdf(s, 0.5) == 0.0);
  CHECK(stats::ecdf(s, 3.0) == doctest::Approx(3.0 / 5.0)); // median of odd n: (n+1)/2 / n
  CHECK(stats::ecdf(s, 100.0) == 1.0);
  CHECK(stats::ecdf(s, 2.5) == doctest::Approx(0.4));
  const std::vector<double> empty;
  CHECK_THROWS_AS(stats::ecdf(empty, 1.0), std::invalid_argument);
}

TEST_CASE("ks_distance basics") {
  // sample against its own ECDF is exactly zero
  std::vector<double> s = {0.3, 0.9, 1.7, 2.2};
  auto self = [&](double z) { return stats::ecdf(s, z); };
  CHECK(stats::ks_distance(s, self) == doctest::Approx(0.0));

  // all mass left of the reference support
  auto right = [](double z) { return z < 100.0 ? 0.0 : 1.0; };
  CHECK(stats::ks_distance(s, right) == doctest::Approx(1.0));

  // samples from the reference law itself: DKW at n = 1e6
  mc::RandomStream rng(5150);
  std::vector<double> u(1000000);
  for (auto& v : u) v = rng.uniform();
  const double ks = stats::ks_distance(u, [](double z) { return std::clamp(z, 0.0, 1.0); });
  CHECK(ks <= 0.002);
}

TEST_CASE("Freedman-Diaconis bin counts") {
  // n = 1000, IQR = 1, range = 10 -> 50 bins
  std::vector<double> s(1000);
  // piecewise-linear order statistics hitting the quartile targets exactly
  for (int i = 0; i < 1000; ++i) {
    const double t = i / 999.0;
    double v;
    if (t <= 0.25)
      v = 2.0 * (t / 0.25);
    else if (t <= 0.75)
      v = 2.0 + (t - 0.25) / 0.5;
    else
      v = 3.0 + 7.0 * ((t - 0.75) / 0.25);
    s[static_cast<size_t>(i)] = v;
  }
  CHECK(stats::fd_bins(s) == 50);

  // n = 8, IQR = 2, range = 4 -> ceil(2) = 2
  const std::vector<double> t = {0.0, 1.0, 1.0, 2.0, 2.0, 3.0, 3.0, 4.0};
  CHECK(stats::fd_bins(t) == 2);

  // translation invariance
  std::vector<double> shifted = s;
  for (auto& v : shifted) v += 123.4;
  CHECK(stats::fd_bins(shifted) == stats::fd_bins(s));

  const std::vector<double> constant(10, 3.0);
  CHECK_THROWS_AS(stats::fd_bins(constant), std::invalid_argument);
  const std::vector<double> tiny = {1.0, 2.0};
  CHECK_THROWS_AS(stats::fd_bins(tiny), std::invalid_argument);
}

TEST_CASE("histogram counting") {
  const std::vector<double> s = {0.0, 0.1, 0.5, 0.99, 1.0, 1.5};
  const auto h = stats::make_histogram(s, 0.0, 1.0, 2);
  CHECK(h.counts[0] == 2); // [0, 0.5)
  CHECK(h.counts[1] == 3); // [0.5, 1]: the hi-edge value folds in; 1.5 out of range
}

TEST_CASE("empirical KL: identical samples give zero") {
  mc::RandomStream rng(31);
  std::vector<double> s(5000);
  for (auto& v : s) v = rng.exponential();
  const auto r = stats::empirical_kl(s, s);
  CHECK(r.value == doctest::Approx(0.0));
  CHECK_FALSE(r.winsorized);
  CHECK(r.bins >= 1);
}

TEST_CASE("empirical KL: same law is near zero, disjoint laws are large") {
  mc::RandomStream rng(32);
  const size_t n = 20000;
  std::vector<double> a(n), b(n), c(n);
  for (size_t i = 0; i < n; ++i) {
    a[i] = rng.exponential();
    b[i] = rng.exponential();
    c[i] = 50.0 + rng.uniform();
  }
  const auto same = stats::empirical_kl(a, b);
  CHECK(same.value >= -1e-6); // nonnegative up to estimator noise
  CHECK(same.value < 0.05);
  const auto far = stats::empirical_kl(a, c);
  CHECK(far.value > 1.0); // zero-bin substitution keeps it finite
  CHECK(std::isfinite(far.value));
}

TEST_CASE("empirical KL input validation and winsorization flag") {
  std::vector<double> a(200, 1.0), b(100, 1.0);
  for (size_t i = 0; i < a.size(); ++i) a[i] = static_cast<double>(i);
  CHECK_THROWS_AS(stats::empirical_kl(a, b), std::invalid_argument);

  std::vector<double> small(50, 1.0);
  CHECK_THROWS_AS(stats::empirical_kl(small, small), std::invalid_argument);

  mc::RandomStream rng(33);
  std::vector<double> p(5000), q(5000);
  for (size_t i = 0; i < p.size(); ++i) {
    p[i] = std::pow(rng.uniform(), -1.0); // heavy tail
    q[i] = std::pow(rng.uniform(), -1.0);
  }
  stats::KlOptions opt;
  opt.winsor_quantile = 0.9999;
  const auto r = stats::empirical_kl(p, q, opt);
  CHECK(r.winsorized);
  CHECK(std::isfinite(r.value));
}
