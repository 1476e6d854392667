// Copyright 2026 The evtsir Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "evtsir/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace evtsir::stats {

namespace {

// Linear-interpolation quantile on a sorted sample (index p*(n-1)).
double quantile_sorted(std::span<const double> sorted, double p) {
  const size_t n = sorted.size();
  const double idx = p * static_cast<double>(n - 1);
  const size_t lo = static_cast<size_t>(idx);
  if (lo + 1 >= n) return sorted[n - 1];
  const double frac = idx - static_cast<double>(lo);
  return sorted[lo] * (1.0 - frac) + sorted[lo + 1] * frac;
}

std::vector<double> sorted_copy(std::span<const double> v) {
  std::vector<double> s(v.begin(), v.end());
  std::sort(s.begin(), s.end());
  return s;
}

} // namespace

Histogram make_histogram(std::span<const double> samples, double lo, double hi, int bins) {
  if (!(lo < hi)) throw std::invalid_argument("make_histogram: requires lo < hi");
  if (bins < 1) throw std::invalid_argument("make_histogram: requires bins >= 1");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.bins = bins;
  h.counts.assign(static_cast<size_t>(bins), 0);
  h.n = static_cast<long>(samples.size());
  const double width = (hi - lo) / bins;
  for (double v : samples) {
    if (v < lo || v > hi) continue;
    auto idx = static_cast<long>((v - lo) / width);
    idx = std::clamp<long>(idx, 0, bins - 1);
    ++h.counts[static_cast<size_t>(idx)];
  }
  return h;
}

double ecdf(std::span<const double> sorted_samples, double z) {
  if (sorted_samples.empty()) throw std::invalid_argument("ecdf: empty sample");
  const auto it = std::upper_bound(sorted_samples.begin(), sorted_samples.end(), z);
  return static_cast<double>(it - sorted_samples.begin()) /
         static_cast<double>(sorted_samples.size());
}

double ks_distance(std::span<const double> samples,
                   const std::function<double(double)>& cdf) {
  if (samples.empty()) throw std::invalid_argument("ks_distance: empty sample");
  const auto s = sorted_copy(samples);
  const double n = static_cast<double>(s.size());
  double sup = 0.0;
  for (size_t i = 0; i < s.size(); ++i) {
    // at the step: ECDF jumps to (i+1)/n; just below it is i/n and the
    // reference is taken at x- so step-function references compare exactly
    sup = std::max(sup, std::abs(static_cast<double>(i + 1) / n - cdf(s[i])));
    const double below = cdf(std::nexttoward(s[i], -std::numeric_limits<long double>::infinity()));
    sup = std::max(sup, std::abs(static_cast<double>(i) / n - below));
  }
  return sup;
}

int fd_bins(std::span<const double> samples) {
  if (samples.size() < 4) throw std::invalid_argument("fd_bins: requires n >= 4");
  const auto s = sorted_copy(samples);
  const double iqr = quantile_sorted(s, 0.75) - quantile_sorted(s, 0.25);
  if (!(iqr > 0.0)) throw std::invalid_argument("fd_bins: degenerate sample (IQR = 0)");
  const double range = s.back() - s.front();
  const double n_cbrt = std::pow(static_cast<double>(s.size()), -1.0 / 3.0);
  const double w = range / (2.0 * iqr * n_cbrt);
  return std::max(1, static_cast<int>(std::ceil(w)));
}

KlResult empirical_kl(std::span<const double> p_samples, std::span<const double> q_samples,
                      const KlOptions& options) {
  if (p_samples.size() != q_samples.size())
    throw std::invalid_argument("empirical_kl: sample counts must match");
  if (p_samples.size() < 100) throw std::invalid_argument("empirical_kl: requires n >= 100");

  auto ps = sorted_copy(p_samples);
  auto qs = sorted_copy(q_samples);
  KlResult res;
  if (options.winsor_quantile < 1.0) {
    std::vector<double> pooled;
    pooled.reserve(ps.size() + qs.size());
    pooled.insert(pooled.end(), ps.begin(), ps.end());
    pooled.insert(pooled.end(), qs.begin(), qs.end());
    std::sort(pooled.begin(), pooled.end());
    const double cap = quantile_sorted(pooled, options.winsor_quantile);
    for (auto& v : ps) v = std::min(v, cap);
    for (auto& v : qs) v = std::min(v, cap);
    res.winsorized = true;
  }

  const int w = std::max(fd_bins(ps), fd_bins(qs));
  const double lo = std::min(ps.front(), qs.front());
  const double hi = std::max(ps.back(), qs.back());
  const auto hp = make_histogram(ps, lo, hi, w);
  const auto hq = make_histogram(qs, lo, hi, w);

  const double n = static_cast<double>(ps.size());
  double d = 0.0;
  for (int i = 0; i < w; ++i) {
    const double u = static_cast<double>(hp.counts[static_cast<size_t>(i)]);
    if (u <= 0.0) continue;
    double v = static_cast<double>(hq.counts[static_cast<size_t>(i)]);
    if (v <= 0.0) v = 0.5; // half-count regularization for empty reference bins
    d += u / n * std::log(u / v);
  }
  res.value = d;
  res.bins = w;
  return res;
}

} // namespace evtsir::stats
