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

#include "evtsir/specfun.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include <boost/math/special_functions/beta.hpp>

namespace evtsir::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double a) {
  return a <= 0.0 && a == std::floor(a);
}

// Geometric tail extrapolation from the last term and the observed ratio.
double tail_estimate(double last_abs, double ratio) {
  if (!(ratio > 0.0) || ratio >= 1.0) return last_abs;
  return last_abs * ratio / (1.0 - ratio);
}

} // namespace

void SeriesControl::validate() const {
  if (!(rel_tol > 0.0)) throw std::invalid_argument("SeriesControl: rel_tol must be > 0");
  if (max_total_order < 1 || max_outer_p < 1 || stall_window < 1)
    throw std::invalid_argument("SeriesControl: caps must be >= 1");
}

double ln_gamma(double x) {
  if (!(x > 0.0)) throw std::domain_error("ln_gamma: requires x > 0");
  return std::lgamma(x);
}

LogSigned ln_pochhammer(double a, int p) {
  if (p < 0) throw std::domain_error("ln_pochhammer: requires p >= 0");
  if (p == 0) return {0.0, +1};
  if (a > 0.0) return {std::lgamma(a + p) - std::lgamma(a), +1};
  // a <= 0: the product a(a+1)...(a+p-1) may cross zero or flip signs.
  if (is_nonpositive_integer(a) && p > -a) return {-kInf, 0};
  double log_abs = 0.0;
  int sign = +1;
  for (int j = 0; j < p; ++j) {
    const double f = a + j;
    if (f == 0.0) return {-kInf, 0};
    if (f < 0.0) sign = -sign;
    log_abs += std::log(std::abs(f));
  }
  return {log_abs, sign};
}

SeriesResult kummer_1f1(double a, double b, double x, const SeriesControl& ctl) {
  ctl.validate();
  if (is_nonpositive_integer(b))
    throw std::domain_error("kummer_1f1: b must not be a non-positive integer");
  if (x < 0.0) {
    SeriesResult r = kummer_1f1(b - a, b, -x, ctl);
    r.value *= std::exp(x);
    r.est_tail *= std::exp(x);
    return r;
  }
  SeriesResult res;
  double term = 1.0;
  double sum = 1.0;
  double prev_abs = 1.0;
  int stall = 0;
  int k = 0;
  for (; k < ctl.max_total_order; ++k) {
    term *= (a + k) * x / ((b + k) * (k + 1));
    sum += term;
    const double t = std::abs(term);
    if (t <= ctl.rel_tol * std::abs(sum)) {
      if (++stall >= ctl.stall_window) {
        res.converged = true;
        res.est_tail = tail_estimate(t, prev_abs > 0.0 ? t / prev_abs : 0.0);
        ++k;
        break;
      }
    } else {
      stall = 0;
    }
    if (term == 0.0) { // terminating a
      res.converged = true;
      ++k;
      break;
    }
    prev_abs = t;
  }
  res.value = sum;
  res.terms_used = k + 1;
  if (!res.converged) res.est_tail = tail_estimate(std::abs(term), std::abs(term) / prev_abs);
  return res;
}

ShellSums::ShellSums(std::span<const double> b, std::span<const double> x, double scale) {
  if (b.size() != x.size()) throw std::invalid_argument("ShellSums: b and x size mismatch");
  if (!(scale > 0.0)) throw std::invalid_argument("ShellSums: scale must be > 0");
  b_.assign(b.begin(), b.end());
  x_scaled_.resize(x.size());
  bx_pow_.resize(x.size());
  for (size_t i = 0; i < x.size(); ++i) {
    x_scaled_[i] = x[i] / scale;
    bx_pow_[i] = 1.0;
  }
  log_scale_ = std::log(scale);
  s_.assign(1, 1.0);
  s_abs_.assign(1, 1.0);
}

void ShellSums::extend(int k_max) {
  const int have = computed();
  if (k_max <= have) return;
  // grow the power sums c_j up to j = k_max - 1
  for (int j = static_cast<int>(c_.size()); j < k_max; ++j) {
    double cj = 0.0, caj = 0.0;
    for (size_t i = 0; i < b_.size(); ++i) {
      bx_pow_[i] *= x_scaled_[i]; // (x_i/scale)^(j+1)
      cj += b_[i] * bx_pow_[i];
      caj += std::abs(b_[i] * bx_pow_[i]);
    }
    c_.push_back(cj);
    c_abs_.push_back(caj);
  }
  s_.reserve(static_cast<size_t>(k_max) + 1);
  s_abs_.reserve(static_cast<size_t>(k_max) + 1);
  for (int k = have; k < k_max; ++k) {
    double acc = 0.0, acc_abs = 0.0;
    for (int j = 0; j <= k; ++j) {
      acc += c_[static_cast<size_t>(j)] * s_[static_cast<size_t>(k - j)];
      acc_abs += c_abs_[static_cast<size_t>(j)] * s_abs_[static_cast<size_t>(k - j)];
    }
    s_.push_back(acc / (k + 1));
    s_abs_.push_back(acc_abs / (k + 1));
  }
}

SeriesResult lauricella_fd(double a, std::span<const double> b, double c,
                           std::span<const double> x, const SeriesControl& ctl) {
  ctl.validate();
  if (b.size() != x.size()) throw std::invalid_argument("lauricella_fd: b/x size mismatch");
  if (is_nonpositive_integer(c))
    throw std::domain_error("lauricella_fd: c must not be a non-positive integer");
  for (double xi : x)
    if (!(std::abs(xi) < 1.0)) throw std::domain_error("lauricella_fd: requires |x_i| < 1");

  const bool terminating = is_nonpositive_integer(a);
  const int k_term = terminating ? static_cast<int>(-a) : -1;
  const int k_cap = terminating ? std::min(k_term, ctl.max_total_order) : ctl.max_total_order;

  ShellSums shells(b, x);
  shells.extend(k_cap);

  SeriesResult res;
  double sum = 0.0;
  double ratio = 1.0; // (a)_k / (c)_k, exact in double for the k ranges used here
  double prev_abs = 0.0;
  int stall = 0;
  int k = 0;
  for (; k <= k_cap; ++k) {
    const double term = ratio * shells.at(k);
    sum += term;
    const double t = std::abs(term);
    if (terminating && k == k_term) {
      res.converged = true;
      ++k;
      break;
    }
    if (t <= ctl.rel_tol * std::abs(sum)) {
      if (++stall >= ctl.stall_window) {
        res.converged = true;
        res.est_tail = tail_estimate(t, prev_abs > 0.0 ? t / prev_abs : 0.0);
        ++k;
        break;
      }
    } else {
      stall = 0;
    }
    prev_abs = t;
    ratio *= (a + k) / (c + k);
    if (ratio == 0.0) { // (a)_k hit zero exactly
      res.converged = true;
      ++k;
      break;
    }
  }
  res.value = sum;
  res.terms_used = k;
  if (terminating) res.est_tail = 0.0;
  if (!res.converged && prev_abs > 0.0) {
    const double last = std::abs(ratio * shells.at(std::min(k, shells.computed())));
    res.est_tail = tail_estimate(last, last / prev_abs);
  }
  return res;
}

SeriesResult confluent_ed(double a, std::span<const double> b, double c1, double c2,
                          std::span<const double> x, const SeriesControl& ctl) {
  ctl.validate();
  if (b.size() != x.size() || b.empty())
    throw std::invalid_argument("confluent_ed: b/x size mismatch or empty");
  if (is_nonpositive_integer(c1) || is_nonpositive_integer(c2))
    throw std::domain_error("confluent_ed: c parameters must not be non-positive integers");
  for (double xi : x)
    if (!(std::abs(xi) < 1.0)) throw std::domain_error("confluent_ed: requires |x_i| < 1");

  const int cap = ctl.max_total_order;
  // tail group shells T_j over x[1..]; for n = 1 only T_0 = 1 contributes
  ShellSums tail(b.subspan(1), x.subspan(1));
  tail.extend(cap);

  // column coefficients A_{p1} = (b1)_{p1} x1^{p1} / ((c1)_{p1} p1!) in log-sign
  std::vector<double> col_log(static_cast<size_t>(cap) + 1);
  std::vector<int> col_sign(static_cast<size_t>(cap) + 1);
  const double lx1 = x[0] == 0.0 ? -kInf : std::log(std::abs(x[0]));
  const int sx1 = x[0] < 0.0 ? -1 : +1;
  col_log[0] = 0.0;
  col_sign[0] = +1;
  for (int p1 = 0; p1 < cap; ++p1) {
    const double bf = b[0] + p1;
    if (col_sign[static_cast<size_t>(p1)] == 0 || bf == 0.0 || x[0] == 0.0) {
      col_log[static_cast<size_t>(p1) + 1] = -kInf;
      col_sign[static_cast<size_t>(p1) + 1] = 0;
      continue;
    }
    col_log[static_cast<size_t>(p1) + 1] = col_log[static_cast<size_t>(p1)] +
        std::log(std::abs(bf)) + lx1 - std::log(c1 + p1) - std::log1p(p1);
    col_sign[static_cast<size_t>(p1) + 1] =
        col_sign[static_cast<size_t>(p1)] * (bf < 0.0 ? -1 : +1) * sx1;
  }
  std::vector<double> log_c2(static_cast<size_t>(cap) + 1, 0.0);
  for (int j = 0; j < cap; ++j)
    log_c2[static_cast<size_t>(j) + 1] = log_c2[static_cast<size_t>(j)] + std::log(c2 + j);

  SeriesResult res;
  double sum = 0.0;
  double log_a = 0.0; // log (a)_K (a > 0 in every use here; sign handled below)
  int sign_a = +1;
  double prev_abs = 0.0;
  int stall = 0;
  int K = 0;
  for (; K <= cap; ++K) {
    double shell = 0.0;
    double shell_abs = 0.0;
    for (int p1 = 0; p1 <= K; ++p1) {
      const int j = K - p1;
      const double tj = tail.at(j);
      if (col_sign[static_cast<size_t>(p1)] == 0) continue;
      const double lt = log_a + col_log[static_cast<size_t>(p1)] -
                        log_c2[static_cast<size_t>(j)] + j * tail.log_scale();
      if (tj != 0.0)
        shell += sign_a * col_sign[static_cast<size_t>(p1)] *
                 std::copysign(std::exp(lt + std::log(std::abs(tj))), tj);
      const double ta = tail.abs_at(j);
      if (ta > 0.0) shell_abs += std::exp(lt + std::log(ta));
    }
    sum += shell;
    const double t = std::abs(shell);
    if (t <= ctl.rel_tol * std::abs(sum)) {
      if (++stall >= ctl.stall_window) {
        res.converged = true;
        res.est_tail = tail_estimate(t, prev_abs > 0.0 ? t / prev_abs : 0.0);
        ++K;
        break;
      }
    } else {
      stall = 0;
    }
    prev_abs = t;
    const double af = a + K;
    if (af == 0.0) { // terminating a (not exercised by the SIR pdf, kept for generality)
      res.converged = true;
      ++K;
      break;
    }
    if (af < 0.0) sign_a = -sign_a;
    log_a += std::log(std::abs(af));
  }
  res.value = sum;
  res.terms_used = K;
  if (!res.converged && prev_abs > 0.0)
    res.est_tail = tail_estimate(prev_abs, 1.0); // cap-stop: conservative
  return res;
}

double reg_inc_beta(double a, double b, double u) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("reg_inc_beta: requires a, b > 0");
  if (u < 0.0 || u > 1.0) throw std::domain_error("reg_inc_beta: requires u in [0, 1]");
  return boost::math::ibeta(a, b, u);
}

double reg_inc_beta_inv(double a, double b, double q) {
  if (!(a > 0.0) || !(b > 0.0)) throw std::domain_error("reg_inc_beta_inv: requires a, b > 0");
  if (!(q >= 0.0 && q <= 1.0)) throw std::domain_error("reg_inc_beta_inv: requires q in [0, 1]");
  return boost::math::ibeta_inv(a, b, q);
}

} // namespace evtsir::specfun
