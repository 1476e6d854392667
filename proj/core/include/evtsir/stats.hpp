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

#ifndef EVTSIR_STATS_HPP
#define EVTSIR_STATS_HPP

#include <functional>
#include <span>
#include <vector>

namespace evtsir::stats {

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  int bins = 1;
  std::vector<long> counts;
  long n = 0; ///< total samples offered (in-range ones are counted)
};

Histogram make_histogram(std::span<const double> samples, double lo, double hi, int bins);

/// Right-continuous empirical CDF of a sorted sample at z.
double ecdf(std::span<const double> sorted_samples, double z);

/// sup over the sample of |ECDF - cdf|, both step sides.
double ks_distance(std::span<const double> samples,
                   const std::function<double(double)>& cdf);

/// Freedman-Diaconis bin count: ceil((max-min) / (2 IQR n^{-1/3})), floor 1.
/// Quartiles by linear interpolation on the order statistics.
int fd_bins(std::span<const double> samples);

struct KlOptions {
  /// Clamp both sample sets at this pooled quantile before binning; 1 = off.
  double winsor_quantile = 1.0;
};

struct KlResult {
  double value = 0.0;
  int bins = 0;
  bool winsorized = false;
};

/// Histogram estimate of D(P||Q) over W = max(FD bins of either set)
/// equispaced bins spanning the union of both ranges:
///   D ~= sum_{u_i > 0} (u_i/n) log(u_i / v_i),  v_i = 0 replaced by 0.5.
/// Natural log. Requires equal sample counts n >= 100.
KlResult empirical_kl(std::span<const double> p_samples, std::span<const double> q_samples,
                      const KlOptions& options = {});

} // namespace evtsir::stats

#endif // EVTSIR_STATS_HPP
