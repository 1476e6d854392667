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

#include "evtsir/evt.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "evtsir/errors.hpp"

namespace evtsir::evt {

double frechet_shape(const fading::Scenario& s) {
  s.validate();
  double beta = 0.0;
  for (const auto& p : s.interferers) beta += p.mu;
  return beta;
}

double frechet_scale(const sirdist::SirDistribution& dist, long L) {
  if (L < 2) throw std::invalid_argument("frechet_scale: requires L >= 2");
  const double target = -std::log(static_cast<double>(L)); // log-survival at a_L

  // beta-prime seed: invert I_{u/(1+u)}(psi1, phi1) = 1 - 1/L
  const auto g = fading::gamma_approx(dist.scenario());
  const double v = boost::math::ibetac_inv(g.psi1, g.phi1, 1.0 / static_cast<double>(L));
  double guess = (v / (1.0 - v)) * g.psi2 / g.phi2;
  if (!(guess > 0.0) || !std::isfinite(guess)) guess = 1.0;

  auto f = [&](double z) {
    const auto r = dist.log_sf(z);
    if (!r.converged) {
      std::ostringstream msg;
      msg << "frechet_scale: SIR CDF series did not converge at z = " << z
          << " (outer terms used " << r.terms_used << ")";
      throw NumericError(msg.str());
    }
    return r.value - target;
  };

  double lo = guess / 10.0;
  double hi = guess * 10.0;
  double flo = f(lo);
  double fhi = f(hi);
  int expand = 0;
  while (flo < 0.0 && expand++ < 40) { // survival already below 1/L: move left
    hi = lo;
    fhi = flo;
    lo /= 10.0;
    flo = f(lo);
  }
  while (fhi > 0.0 && expand++ < 40) {
    lo = hi;
    flo = fhi;
    hi *= 10.0;
    fhi = f(hi);
  }
  if (!(flo >= 0.0 && fhi <= 0.0)) {
    std::ostringstream msg;
    msg << "frechet_scale: failed to bracket the quantile; tried [" << lo << ", " << hi
        << "] with f = [" << flo << ", " << fhi << "]";
    throw NumericError(msg.str());
  }

  auto tol = [](double a, double b) { return (b - a) <= 1e-9 * std::abs(b); };
  std::uintmax_t max_iter = 200;
  const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, tol, max_iter);
  return 0.5 * (r.first + r.second);
}

double frechet_scale(const fading::Scenario& s, long L, const specfun::SeriesControl& ctl) {
  return frechet_scale(sirdist::SirDistribution(s, ctl), L);
}

FrechetParams frechet_params(const fading::Scenario& s, long L,
                             const specfun::SeriesControl& ctl) {
  return {frechet_scale(s, L, ctl), frechet_shape(s), L};
}

double frechet_cdf(const FrechetParams& fp, double z) {
  if (z <= 0.0) return 0.0;
  return std::exp(-std::pow(z / fp.scale, -fp.shape));
}

double frechet_pdf(const FrechetParams& fp, double z) {
  if (!(z > 0.0)) throw std::domain_error("frechet_pdf: requires z > 0");
  const double t = std::pow(z / fp.scale, -fp.shape);
  return fp.shape / z * t * std::exp(-t);
}

double frechet_quantile(const FrechetParams& fp, double q) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("frechet_quantile: requires q in (0, 1)");
  return fp.scale * std::pow(-std::log(q), -1.0 / fp.shape);
}

double frechet_moment(const FrechetParams& fp, double nu) {
  if (!(nu > 0.0)) throw std::domain_error("frechet_moment: requires nu > 0");
  if (nu >= fp.shape) {
    std::ostringstream msg;
    msg << "frechet_moment: moment of order " << nu << " diverges for shape " << fp.shape;
    throw NumericError(msg.str());
  }
  return std::pow(fp.scale, nu) * std::exp(std::lgamma(1.0 - nu / fp.shape));
}

ConvergenceBound convergence_exponent(const fading::Scenario& s) {
  const double beta = frechet_shape(s);
  ConvergenceBound b;
  b.delta = 1.0 / beta;
  std::ostringstream d;
  d << "O(L^-" << b.delta << " + L^-1)";
  b.description = d.str();
  return b;
}

Dominance stochastic_compare(const FrechetParams& a, const FrechetParams& b) {
  if (a.shape != b.shape)
    throw std::invalid_argument("stochastic_compare: shapes differ; ordering undefined");
  if (a.scale > b.scale) return Dominance::first_dominates;
  if (a.scale < b.scale) return Dominance::second_dominates;
  return Dominance::equal;
}

} // namespace evtsir::evt
