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

#include "evtsir/fading.hpp"

#include <cmath>
#include <stdexcept>
#include <tuple>

#include "evtsir/specfun.hpp"

namespace evtsir::fading {

void FadingParams::validate() const {
  if (!(kappa >= 0.0)) throw std::invalid_argument("FadingParams: kappa must be >= 0");
  if (!(mu > 0.0)) throw std::invalid_argument("FadingParams: mu must be > 0");
  if (!(m > 0.0)) throw std::invalid_argument("FadingParams: m must be > 0");
  if (!(mean_power > 0.0)) throw std::invalid_argument("FadingParams: mean_power must be > 0");
}

void Scenario::validate() const {
  source.validate();
  if (interferers.empty()) throw std::invalid_argument("Scenario: requires N >= 1 interferers");
  for (const auto& p : interferers) p.validate();
}

DerivedParams derive_params(const Scenario& s) {
  s.validate();
  DerivedParams d;
  const auto& src = s.source;
  d.theta = src.mean_power / (src.mu * (1.0 + src.kappa));
  d.lambda = (src.mu * src.kappa + src.m) * src.mean_power / (src.mu * (1.0 + src.kappa) * src.m);
  d.theta_i.reserve(s.interferers.size());
  d.lambda_i.reserve(s.interferers.size());
  for (const auto& p : s.interferers) {
    d.theta_i.push_back(p.mean_power / (p.mu * (1.0 + p.kappa)));
    d.lambda_i.push_back((p.mu * p.kappa + p.m) * p.mean_power / (p.mu * (1.0 + p.kappa) * p.m));
  }
  return d;
}

std::pair<double, double> gamma_match(const FadingParams& p) {
  p.validate();
  const double k = p.kappa;
  const double psi1 = p.m * p.mu * (1.0 + k) * (1.0 + k) / (p.m + p.mu * k * k + 2.0 * p.m * k);
  return {psi1, p.mean_power / psi1};
}

std::pair<double, double> interferer_sum_match(const Scenario& s) {
  s.validate();
  double mean = 0.0;
  double var = 0.0;
  for (const auto& p : s.interferers) {
    const auto [p1, p2] = gamma_match(p);
    mean += p1 * p2;
    var += p1 * p2 * p2;
  }
  const double phi2 = var / mean;
  return {mean / phi2, phi2};
}

GammaApprox gamma_approx(const Scenario& s) {
  GammaApprox g;
  std::tie(g.psi1, g.psi2) = gamma_match(s.source);
  std::tie(g.phi1, g.phi2) = interferer_sum_match(s);
  return g;
}

double sample_power(const FadingParams& p, mc::RandomStream& stream) {
  const double theta = p.mean_power / (p.mu * (1.0 + p.kappa));
  if (p.kappa == 0.0) return theta * stream.gamma(p.mu);
  const double shadow = stream.gamma(p.m, 1.0 / p.m);
  const auto clusters = stream.poisson(p.mu * p.kappa * shadow);
  return theta * stream.gamma(p.mu + static_cast<double>(clusters));
}

double sample_sir(const Scenario& s, mc::RandomStream& stream) {
  const double x = sample_power(s.source, stream);
  double y = 0.0;
  for (const auto& p : s.interferers) y += sample_power(p, stream);
  return x / y;
}

double beta_prime_sir_cdf(const GammaApprox& g, double z) {
  if (!(z > 0.0)) {
    if (z == 0.0) return 0.0;
    throw std::domain_error("beta_prime_sir_cdf: requires z >= 0");
  }
  const double u = z * g.phi2 / g.psi2;
  return specfun::reg_inc_beta(g.psi1, g.phi1, u / (1.0 + u));
}

double beta_prime_sir_cdf(const Scenario& s, double z) {
  return beta_prime_sir_cdf(gamma_approx(s), z);
}

double beta_prime_sir_pdf(const GammaApprox& g, double z) {
  if (!(z > 0.0)) throw std::domain_error("beta_prime_sir_pdf: requires z > 0");
  const double r = g.phi2 / g.psi2;
  const double u = z * r;
  const double log_b = std::lgamma(g.psi1) + std::lgamma(g.phi1) - std::lgamma(g.psi1 + g.phi1);
  const double log_pdf = (g.psi1 - 1.0) * std::log(u) -
                         (g.psi1 + g.phi1) * std::log1p(u) - log_b;
  return r * std::exp(log_pdf);
}

} // namespace evtsir::fading
