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

#ifndef EVTSIR_FADING_HPP
#define EVTSIR_FADING_HPP

#include <vector>

#include "evtsir/random_stream.hpp"

namespace evtsir::fading {

/// One kappa-mu shadowed source or interferer.
///  kappa -- ratio of dominant to scattered power, >= 0
///  mu    -- number of multipath clusters, > 0 (real-valued)
///  m     -- Nakagami shadowing severity of the dominant component, > 0
///  mean_power -- E[power] in linear units, > 0
struct FadingParams {
  double kappa = 0.0;
  double mu = 1.0;
  double m = 1.0;
  double mean_power = 1.0;

  void validate() const; // throws std::invalid_argument
};

/// A source plus N >= 1 interferers.
struct Scenario {
  FadingParams source;
  std::vector<FadingParams> interferers;

  void validate() const;
  std::size_t n_interferers() const { return interferers.size(); }
};

/// The (theta, lambda) parameterization feeding every series:
///   theta   = xbar / (mu (1+kappa))
///   lambda  = (mu kappa + m) xbar / (mu (1+kappa) m)
/// and the per-interferer analogues. lambda/theta = (mu kappa + m)/m >= 1.
struct DerivedParams {
  double theta = 0.0;
  double lambda = 0.0;
  std::vector<double> theta_i;
  std::vector<double> lambda_i;
};

/// Two-moment gamma fits: (psi1, psi2) for the source power, (phi1, phi2) for
/// the interferer-power sum.
struct GammaApprox {
  double psi1 = 0.0;
  double psi2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
};

DerivedParams derive_params(const Scenario& s);

/// Gamma moment match of one kappa-mu shadowed power:
///   psi1 = m mu (1+kappa)^2 / (m + mu kappa^2 + 2 m kappa),  psi2 = mean/psi1.
std::pair<double, double> gamma_match(const FadingParams& p);

/// Gamma fit of the interferer-power sum by matching the mean and variance of
/// the summed per-interferer gamma fits.
std::pair<double, double> interferer_sum_match(const Scenario& s);

GammaApprox gamma_approx(const Scenario& s);

/// One kappa-mu shadowed power variate:
///   s ~ Gamma(m, mean 1),  P ~ Poisson(mu kappa s),  return theta * Gamma(mu + P, 1)
/// with theta = mean/(mu(1+kappa)). kappa = 0 short-circuits to Gamma(mu, mean/mu).
double sample_power(const FadingParams& p, mc::RandomStream& stream);

/// One SIR variate: source power over the sum of the N interferer powers.
double sample_sir(const Scenario& s, mc::RandomStream& stream);

/// Beta-prime approximation of the SIR CDF: I_{u/(1+u)}(psi1, phi1) at
/// u = z phi2/psi2. Cheap surrogate used to seed quantile searches.
double beta_prime_sir_cdf(const Scenario& s, double z);
double beta_prime_sir_cdf(const GammaApprox& g, double z);

/// Density of the beta-prime approximation (plot/CLI companion of the CDF).
double beta_prime_sir_pdf(const GammaApprox& g, double z);

} // namespace evtsir::fading

#endif // EVTSIR_FADING_HPP
