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

#ifndef EVTSIR_SIRDIST_HPP
#define EVTSIR_SIRDIST_HPP

#include <atomic>
#include <vector>

#include "evtsir/fading.hpp"
#include "evtsir/specfun.hpp"

namespace evtsir::sirdist {

/// Exact single-link SIR distribution. The CDF is the outer p-sum over
/// terminating Lauricella F_D shells; the PDF is the transformed confluent E_D
/// form. Interferers are re-ordered at construction so the smallest theta_i is
/// the transformation pivot (the SIR law is permutation-invariant in the
/// interferers). Evaluation is const and thread-safe; the z-independent outer
/// prefactors are cached eagerly.
class SirDistribution {
 public:
  explicit SirDistribution(fading::Scenario scenario, specfun::SeriesControl ctl = {});

  /// F(z) in [0, 1]. For z below z_min() on the non-terminating parameter
  /// path, reports the bound F(z_min) (see z_min()).
  specfun::SeriesResult cdf(double z) const;

  /// log(1 - F(z)); well conditioned deep in the tail.
  specfun::SeriesResult log_sf(double z) const;

  /// f(z) >= 0.
  specfun::SeriesResult pdf(double z) const;

  /// Small-z crossover of the CDF series on the non-terminating path (mu not
  /// an integer); below it the series converges too slowly and cdf() returns
  /// the complementary bound at z_min. Zero when mu is a positive integer
  /// (the inner series terminates and small z is evaluable directly).
  double z_min() const { return z_min_; }

  const fading::DerivedParams& derived() const { return derived_; }
  const fading::Scenario& scenario() const { return scenario_; }
  double sum_mu_interferers() const { return beta_; }

  struct Diagnostics {
    long shells_evaluated = 0;
    long cap_hits = 0;
  };
  Diagnostics diagnostics() const;

 private:
  struct SfEval {
    double log_sf;
    bool converged;
    int outer_used;
    double est_tail_rel;
  };
  SfEval eval_log_sf(double z) const;
  double log_outer_coeff(int p) const;

  fading::Scenario scenario_;       // interferers re-ordered, theta-ascending
  specfun::SeriesControl ctl_;
  fading::DerivedParams derived_;
  double beta_ = 0.0;               // sum of interferer mu
  double mu_ = 0.0;
  double m_ = 0.0;
  bool mu_is_integer_ = false;
  double one_minus_ratio_ = 0.0;    // 1 - theta/lambda
  double z_min_ = 0.0;
  std::vector<double> b_;           // (mu_i - m_i ..., m_i ...)
  std::vector<double> log_c1_;      // outer coefficients, cached to max_outer_p
  double log_pdf_k_ = 0.0;          // log K of the pdf prefactor
  mutable std::atomic<long> shells_{0};
  mutable std::atomic<long> cap_hits_{0};
};

/// One-shot wrappers.
specfun::SeriesResult exact_cdf(const fading::Scenario& s, double z,
                                const specfun::SeriesControl& ctl = {});
specfun::SeriesResult exact_pdf(const fading::Scenario& s, double z,
                                const specfun::SeriesControl& ctl = {});

} // namespace evtsir::sirdist

#endif // EVTSIR_SIRDIST_HPP
