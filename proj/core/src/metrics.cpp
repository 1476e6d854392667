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

#include "evtsir/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "evtsir/errors.hpp"

namespace evtsir::metrics {

namespace {

constexpr double kLn2 = 0.6931471805599453;

double log2_1p(double x) { return std::log1p(x) / kLn2; }

} // namespace

void FasConfig::validate() const {
  if (L < 2) throw std::invalid_argument("FasConfig: L must be >= 2");
  if (Ls < 1 || Ls > L) throw std::invalid_argument("FasConfig: requires 1 <= Ls <= L");
  if (mc_samples < 2) throw std::invalid_argument("FasConfig: mc_samples must be >= 2");
}

double outage_asymptotic(const evt::FrechetParams& fp, double gamma_t) {
  if (!(gamma_t > 0.0)) throw std::domain_error("outage_asymptotic: requires gamma_t > 0");
  return evt::frechet_cdf(fp, gamma_t);
}

mc::Estimate outage_exact_mc(const fading::Scenario& s, long L, double gamma_t, long reps,
                             std::uint64_t seed, int workers) {
  if (!(gamma_t > 0.0)) throw std::domain_error("outage_exact_mc: requires gamma_t > 0");
  mc::MaximaStudy study{s, L, reps, seed};
  study.validate();
  const auto maxima = mc::run_maxima_study(study, workers);
  long hits = 0;
  for (double v : maxima)
    if (v <= gamma_t) ++hits;
  const double n = static_cast<double>(reps);
  const double p = static_cast<double>(hits) / n;
  return {p, std::sqrt(p * (1.0 - p) / n), reps};
}

double ergodic_rate_asymptotic(const evt::FrechetParams& fp,
                               const quadrature::QuadratureControl& ctl) {
  if (!(fp.scale > 0.0) || !(fp.shape > 0.0))
    throw std::domain_error("ergodic_rate_asymptotic: invalid Frechet parameters");
  const double a = fp.scale;
  const double inv_beta = 1.0 / fp.shape;
  const auto r = quadrature::integrate_exp_sinh(
      [a, inv_beta](double t) {
        return log2_1p(a * std::pow(t, -inv_beta)) * std::exp(-t);
      },
      ctl);
  if (!r.converged) {
    std::ostringstream msg;
    msg << "ergodic_rate_asymptotic: quadrature did not converge (levels = " << r.levels
        << ", evals = " << r.evals << ", last delta = " << r.last_delta << ")";
    throw NumericError(msg.str());
  }
  return r.value;
}

mc::Estimate ergodic_rate_mc(const fading::Scenario& s, long L, long reps, std::uint64_t seed,
                             int workers) {
  mc::MaximaStudy study{s, L, reps, seed};
  study.validate();
  const fading::Scenario& scenario = study.scenario;
  auto rates = mc::generate_indexed(reps, workers, seed, [&scenario, L](long, mc::RandomStream& stream) {
    double best = 0.0;
    for (long j = 0; j < L; ++j) best = std::max(best, fading::sample_sir(scenario, stream));
    return log2_1p(best);
  });
  return mc::estimate_with_se(rates);
}

std::vector<double> sample_top_order_stats(const evt::FrechetParams& fp, long ls,
                                           mc::RandomStream& stream) {
  if (ls < 1) throw std::invalid_argument("sample_top_order_stats: requires Ls >= 1");
  std::vector<double> out(static_cast<size_t>(ls));
  double arrival = 0.0;
  for (long k = 0; k < ls; ++k) {
    arrival += stream.exponential();
    out[static_cast<size_t>(k)] = fp.scale * std::pow(arrival, -1.0 / fp.shape);
  }
  return out;
}

mc::Estimate fas_rate_upper_bound(const evt::FrechetParams& fp, const FasConfig& cfg,
                                  std::uint64_t seed, int workers) {
  cfg.validate();
  const long ls = cfg.Ls;
  auto sums = mc::generate_indexed(cfg.mc_samples, workers, seed,
                                   [&fp, ls](long, mc::RandomStream& stream) {
                                     double rate = 0.0;
                                     double arrival = 0.0;
                                     for (long k = 0; k < ls; ++k) {
                                       arrival += stream.exponential();
                                       rate += log2_1p(fp.scale *
                                                       std::pow(arrival, -1.0 / fp.shape));
                                     }
                                     return rate;
                                   });
  return mc::estimate_with_se(sums);
}

mc::Estimate fas_simulated_rate(const fading::Scenario& s, const FasConfig& cfg,
                                std::uint64_t seed, int workers) {
  cfg.validate();
  s.validate();
  const long L = cfg.L;
  const size_t ls = static_cast<size_t>(cfg.Ls);
  auto sums = mc::generate_indexed(
      cfg.mc_samples, workers, seed, [&s, L, ls](long, mc::RandomStream& stream) {
        // running top-Ls selection: keep a sorted-ascending buffer of the best
        std::vector<double> best;
        best.reserve(ls + 1);
        for (long j = 0; j < L; ++j) {
          const double v = fading::sample_sir(s, stream);
          if (best.size() < ls) {
            best.insert(std::lower_bound(best.begin(), best.end(), v), v);
          } else if (v > best.front()) {
            best.erase(best.begin());
            best.insert(std::lower_bound(best.begin(), best.end(), v), v);
          }
        }
        double rate = 0.0;
        for (double v : best) rate += log2_1p(v);
        return rate;
      });
  return mc::estimate_with_se(sums);
}

} // namespace evtsir::metrics
