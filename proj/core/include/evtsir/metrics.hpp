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

#ifndef EVTSIR_METRICS_HPP
#define EVTSIR_METRICS_HPP

#include "evtsir/evt.hpp"
#include "evtsir/montecarlo.hpp"
#include "evtsir/quadrature.hpp"

namespace evtsir::metrics {

/// Full-array-selection setup: the best Ls of L antennas are kept.
struct FasConfig {
  long L = 2;
  long Ls = 1;
  long mc_samples = 100000;

  void validate() const;
};

/// Outage of max-SIR scheduling at threshold gamma_t under the Frechet limit.
double outage_asymptotic(const evt::FrechetParams& fp, double gamma_t);

/// Simulated outage: fraction of reps whose max-over-L SIR is <= gamma_t,
/// with binomial standard error.
mc::Estimate outage_exact_mc(const fading::Scenario& s, long L, double gamma_t, long reps,
                             std::uint64_t seed = mc::RandomStream::kDefaultSeed,
                             int workers = 0);

/// Asymptotic ergodic rate (bits per channel use) of max-SIR scheduling:
///   R = int_0^inf log2(1 + a_L t^{-1/beta}) e^{-t} dt
/// by double-exponential quadrature with node-count doubling.
double ergodic_rate_asymptotic(const evt::FrechetParams& fp,
                               const quadrature::QuadratureControl& ctl = {});

/// Simulated ergodic rate: mean of log2(1 + max-over-L SIR).
mc::Estimate ergodic_rate_mc(const fading::Scenario& s, long L, long reps,
                             std::uint64_t seed = mc::RandomStream::kDefaultSeed,
                             int workers = 0);

/// One draw from the asymptotic joint law of the top-Ls normalized order
/// statistics: x_(k) = a_L Gamma_k^{-1/beta} with Gamma_k the k-th arrival of
/// a unit-rate Poisson process. Output is strictly decreasing.
std::vector<double> sample_top_order_stats(const evt::FrechetParams& fp, long ls,
                                           mc::RandomStream& stream);

/// Upper bound on the FAS sum rate under the asymptotic top-Ls law.
mc::Estimate fas_rate_upper_bound(const evt::FrechetParams& fp, const FasConfig& cfg,
                                  std::uint64_t seed = mc::RandomStream::kDefaultSeed,
                                  int workers = 0);

/// Simulated FAS sum rate: sum of log2(1+.) over the Ls largest of L direct
/// SIR draws.
mc::Estimate fas_simulated_rate(const fading::Scenario& s, const FasConfig& cfg,
                                std::uint64_t seed = mc::RandomStream::kDefaultSeed,
                                int workers = 0);

} // namespace evtsir::metrics

#endif // EVTSIR_METRICS_HPP
