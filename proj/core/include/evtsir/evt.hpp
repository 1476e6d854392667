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

#ifndef EVTSIR_EVT_HPP
#define EVTSIR_EVT_HPP

#include <string>

#include "evtsir/sirdist.hpp"

namespace evtsir::evt {

/// Frechet limit of the max-over-L SIR: shape beta = sum of interferer mu,
/// scale a_L = F^{-1}(1 - 1/L), location fixed at 0.
struct FrechetParams {
  double scale = 1.0; ///< a_L, linear SIR units
  double shape = 1.0; ///< beta
  long L = 1;         ///< the maxima length that produced the scale
};

/// Uniform convergence bound of the maxima law: O(L^-delta + L^-1).
struct ConvergenceBound {
  double delta = 1.0; ///< (sum mu_i)^-1
  std::string description;
};

double frechet_shape(const fading::Scenario& s);

/// a_L by derivative-free bracketing inversion of the exact CDF at 1 - 1/L,
/// seeded from the beta-prime approximation. Relative accuracy 1e-9.
double frechet_scale(const fading::Scenario& s, long L,
                     const specfun::SeriesControl& ctl = {});
double frechet_scale(const sirdist::SirDistribution& dist, long L);

FrechetParams frechet_params(const fading::Scenario& s, long L,
                             const specfun::SeriesControl& ctl = {});

double frechet_cdf(const FrechetParams& fp, double z);
double frechet_pdf(const FrechetParams& fp, double z);
double frechet_quantile(const FrechetParams& fp, double q);

/// nu-th moment a^nu Gamma(1 - nu/beta); requires nu < beta, otherwise the
/// moment diverges and a NumericError is thrown.
double frechet_moment(const FrechetParams& fp, double nu);

ConvergenceBound convergence_exponent(const fading::Scenario& s);

enum class Dominance { first_dominates, second_dominates, equal };

/// Stochastic ordering at common shape: the larger scale dominates.
Dominance stochastic_compare(const FrechetParams& a, const FrechetParams& b);

} // namespace evtsir::evt

#endif // EVTSIR_EVT_HPP
