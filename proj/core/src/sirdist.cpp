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

#include "evtsir/sirdist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace evtsir::sirdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool near_integer(double v) { return std::abs(v - std::round(v)) < 1e-9; }

} // namespace

SirDistribution::SirDistribution(fading::Scenario scenario, specfun::SeriesControl ctl)
    : scenario_(std::move(scenario)), ctl_(ctl) {
  scenario_.validate();
  ctl_.validate();

  // pivot ordering: ascending theta_i puts the largest CDF argument and the
  // PDF transformation pivot at index 0
  {
    auto d0 = fading::derive_params(scenario_);
    std::vector<size_t> order(scenario_.interferers.size());
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return d0.theta_i[a] < d0.theta_i[b]; });
    std::vector<fading::FadingParams> sorted;
    sorted.reserve(order.size());
    for (size_t idx : order) sorted.push_back(scenario_.interferers[idx]);
    scenario_.interferers = std::move(sorted);
  }
  derived_ = fading::derive_params(scenario_);

  mu_ = scenario_.source.mu;
  m_ = scenario_.source.m;
  beta_ = 0.0;
  for (const auto& p : scenario_.interferers) beta_ += p.mu;
  mu_is_integer_ = near_integer(mu_) && mu_ >= 1.0;
  one_minus_ratio_ = 1.0 - derived_.theta / derived_.lambda;

  const size_t n = scenario_.interferers.size();
  b_.resize(2 * n);
  for (size_t i = 0; i < n; ++i) {
    b_[i] = scenario_.interferers[i].mu - scenario_.interferers[i].m;
    b_[n + i] = scenario_.interferers[i].m;
  }

  // small-z crossover applies only when the inner series cannot terminate
  if (!mu_is_integer_) {
    const double theta_max = *std::max_element(derived_.theta_i.begin(), derived_.theta_i.end());
    z_min_ = 1e-3 * derived_.theta / theta_max;
  }

  log_c1_.reserve(static_cast<size_t>(ctl_.max_outer_p) + 1);
  for (int p = 0; p <= ctl_.max_outer_p; ++p) log_c1_.push_back(log_outer_coeff(p));

  // pdf prefactor K: theta^(m+beta) Gamma(mu+beta) /
  //   (lambda^m Gamma(mu) Gamma(beta) prod theta_i^(mu_i-m_i) lambda_i^(m_i))
  log_pdf_k_ = (m_ + beta_) * std::log(derived_.theta) + std::lgamma(mu_ + beta_) -
               m_ * std::log(derived_.lambda) - std::lgamma(mu_) - std::lgamma(beta_);
  for (size_t i = 0; i < n; ++i) {
    const auto& p = scenario_.interferers[i];
    log_pdf_k_ -= (p.mu - p.m) * std::log(derived_.theta_i[i]) +
                  p.m * std::log(derived_.lambda_i[i]);
  }
}

double SirDistribution::log_outer_coeff(int p) const {
  // ln[ (m)_p (1-theta/lambda)^p Gamma(beta+mu+p) / ((mu)_p p!) ]
  if (p == 0) return std::lgamma(beta_ + mu_);
  if (one_minus_ratio_ <= 0.0) return -kInf; // kappa = 0: only p = 0 contributes
  return std::lgamma(m_ + p) - std::lgamma(m_) + p * std::log(one_minus_ratio_) +
         std::lgamma(beta_ + mu_ + p) - (std::lgamma(mu_ + p) - std::lgamma(mu_)) -
         std::lgamma(static_cast<double>(p) + 1.0);
}

SirDistribution::SfEval SirDistribution::eval_log_sf(double z) const {
  const size_t n2 = b_.size();
  const double theta = derived_.theta;
  std::vector<double> xs(n2);
  for (size_t i = 0; i < n2 / 2; ++i) {
    xs[i] = theta / (theta + z * derived_.theta_i[i]);
    xs[n2 / 2 + i] = theta / (theta + z * derived_.lambda_i[i]);
  }
  const double cc = 1.0 + beta_;

  double log_k1 = m_ * std::log(theta / derived_.lambda) - std::lgamma(cc) - std::lgamma(mu_);
  for (size_t i = 0; i < n2; ++i)
    if (b_[i] != 0.0) log_k1 += b_[i] * std::log(xs[i]);

  // Inner-series setup. For integer mu the terminating F_D is evaluated after
  // the pivot transformation
  //   F_D(a; b; c; x) = (1-x0)^{-a} F_D(a; c-sum b, b_1.. ; c; x0/(x0-1), (x0-x_j)/(x0-1))
  // which maps every argument to (-inf, 0] and removes the alternating-sum
  // cancellation; arguments may exceed 1 in magnitude, so shells are scaled.
  std::vector<double> bt(b_.begin(), b_.end());
  std::vector<double> xt(xs.begin(), xs.end());
  double log1mx = 0.0;
  double sigma = 1.0;
  if (mu_is_integer_) {
    size_t piv = 0; // xs is largest at the theta-slot of the smallest theta_i
    for (size_t i = 1; i < n2; ++i)
      if (xs[i] > xs[piv]) piv = i;
    const double x0 = xs[piv];
    const double b_sum = std::accumulate(b_.begin(), b_.end(), 0.0);
    bt[piv] = cc - b_sum; // = 1 for the SIR parameterization
    for (size_t j = 0; j < n2; ++j)
      xt[j] = (j == piv) ? x0 / (x0 - 1.0) : (x0 - xs[j]) / (x0 - 1.0);
    for (double v : xt) sigma = std::max(sigma, std::abs(v));
    log1mx = std::log1p(-x0);
  }
  specfun::ShellSums shells(bt, xt, sigma);
  const double log_sigma = shells.log_scale();

  const int inner_cap = ctl_.max_total_order;
  double total = 0.0;
  double est_tail = 0.0;
  bool converged = false;
  bool capped = false;
  int stall = 0;
  double prev_abs = -1.0;
  int p = 0;
  long shells_used = 0;
  for (; p <= ctl_.max_outer_p; ++p) {
    const double log_c1 = log_c1_[static_cast<size_t>(p)];
    if (log_c1 == -kInf) { // kappa = 0 collapse
      converged = true;
      break;
    }
    const double a = 1.0 - p - mu_;
    const int n_term = mu_is_integer_ ? p + static_cast<int>(std::round(mu_)) - 1
                                      : std::numeric_limits<int>::max();
    const int k_hi = std::min(n_term, inner_cap);
    shells.extend(k_hi);

    double fd = 0.0;
    double fd_abs = 0.0;
    double log_r = mu_is_integer_ ? (p + mu_ - 1.0) * log1mx : 0.0;
    int sign_r = 1;
    int inner_stall = 0;
    for (int k = 0;; ++k) {
      ++shells_used;
      const double sk = shells.at(k);
      if (sk != 0.0)
        fd += sign_r * std::copysign(std::exp(log_r + std::log(std::abs(sk))), sk);
      const double sa = shells.abs_at(k);
      double t_abs = 0.0;
      if (sa > 0.0) {
        t_abs = std::exp(log_r + std::log(sa));
        fd_abs += t_abs;
      }
      if (t_abs <= ctl_.rel_tol * std::abs(fd)) {
        if (++inner_stall >= ctl_.stall_window) break;
      } else {
        inner_stall = 0;
      }
      if (k >= k_hi) {
        if (!mu_is_integer_ || n_term > inner_cap) capped = true;
        break;
      }
      const double ak = a + k;
      if (ak == 0.0) break;
      if (ak < 0.0) sign_r = -sign_r;
      log_r += std::log(std::abs(ak)) - std::log(cc + k) + log_sigma;
    }

    const double t_out = std::exp(log_c1) * fd;
    const double noise = std::exp(log_c1) * fd_abs * kEps;
    total += t_out;
    const double t = std::abs(t_out);
    if (t <= ctl_.rel_tol * std::abs(total)) {
      if (++stall >= ctl_.stall_window) {
        converged = true;
        est_tail = prev_abs > 0.0 && t < prev_abs
                       ? t * (t / prev_abs) / (1.0 - t / prev_abs)
                       : t;
        break;
      }
    } else {
      stall = 0;
    }
    if (t <= 4.0 * noise && p > 2) {
      // the remaining outer terms sit below the evaluation noise floor
      est_tail = t;
      converged = est_tail <= ctl_.rel_tol * std::abs(total);
      break;
    }
    prev_abs = t;
  }
  shells_.fetch_add(shells_used, std::memory_order_relaxed);
  if (p > ctl_.max_outer_p || capped) {
    converged = false;
    cap_hits_.fetch_add(1, std::memory_order_relaxed);
    if (prev_abs > 0.0) est_tail = prev_abs;
  }

  SfEval out;
  out.converged = converged;
  out.outer_used = std::min(p, ctl_.max_outer_p);
  out.log_sf = total > 0.0 ? log_k1 + std::log(total) : -kInf;
  out.est_tail_rel = total > 0.0 ? est_tail / total : 0.0;
  return out;
}

specfun::SeriesResult SirDistribution::log_sf(double z) const {
  if (!(z > 0.0)) throw std::domain_error("SirDistribution: requires z > 0");
  const double ze = std::max(z, z_min_);
  const SfEval e = eval_log_sf(ze);
  specfun::SeriesResult r;
  r.value = e.log_sf;
  r.converged = e.converged;
  r.terms_used = e.outer_used;
  r.est_tail = e.est_tail_rel;
  return r;
}

specfun::SeriesResult SirDistribution::cdf(double z) const {
  if (!(z > 0.0)) throw std::domain_error("SirDistribution: requires z > 0");
  const double ze = std::max(z, z_min_);
  const SfEval e = eval_log_sf(ze);
  specfun::SeriesResult r;
  const double sf = std::exp(e.log_sf);
  r.value = std::clamp(1.0 - sf, 0.0, 1.0);
  r.converged = e.converged;
  r.terms_used = e.outer_used;
  r.est_tail = sf * e.est_tail_rel;
  return r;
}

specfun::SeriesResult SirDistribution::pdf(double z) const {
  if (!(z > 0.0)) throw std::domain_error("SirDistribution: requires z > 0");
  const size_t n = scenario_.interferers.size();
  const double theta = derived_.theta;
  const double lambda = derived_.lambda;
  const double t1 = derived_.theta_i[0];
  const double den = theta + z * t1;

  std::vector<double> b;
  std::vector<double> x;
  b.reserve(2 * n);
  x.reserve(2 * n);
  b.push_back(m_);
  x.push_back(z * t1 * (lambda - theta) / (lambda * den));
  for (size_t j = 1; j < n; ++j) {
    b.push_back(scenario_.interferers[j].mu - scenario_.interferers[j].m);
    x.push_back(theta * (derived_.theta_i[j] - t1) / (derived_.theta_i[j] * den));
  }
  for (size_t i = 0; i < n; ++i) {
    b.push_back(scenario_.interferers[i].m);
    x.push_back(theta * (derived_.lambda_i[i] - t1) / (derived_.lambda_i[i] * den));
  }

  auto ed = specfun::confluent_ed(mu_ + beta_, b, mu_, beta_, x, ctl_);
  shells_.fetch_add(ed.terms_used, std::memory_order_relaxed);
  if (!ed.converged) cap_hits_.fetch_add(1, std::memory_order_relaxed);

  const double log_pref = log_pdf_k_ - (1.0 + beta_) * std::log(z) -
                          (mu_ + beta_) * std::log1p(theta / (z * t1));
  specfun::SeriesResult r;
  r.value = std::max(0.0, std::exp(log_pref) * ed.value);
  r.converged = ed.converged;
  r.terms_used = ed.terms_used;
  r.est_tail = std::exp(log_pref) * ed.est_tail;
  return r;
}

SirDistribution::Diagnostics SirDistribution::diagnostics() const {
  return {shells_.load(std::memory_order_relaxed), cap_hits_.load(std::memory_order_relaxed)};
}

specfun::SeriesResult exact_cdf(const fading::Scenario& s, double z,
                                const specfun::SeriesControl& ctl) {
  return SirDistribution(s, ctl).cdf(z);
}

specfun::SeriesResult exact_pdf(const fading::Scenario& s, double z,
                                const specfun::SeriesControl& ctl) {
  return SirDistribution(s, ctl).pdf(z);
}

} // namespace evtsir::sirdist
