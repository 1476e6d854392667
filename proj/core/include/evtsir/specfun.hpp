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

#ifndef EVTSIR_SPECFUN_HPP
#define EVTSIR_SPECFUN_HPP

#include <cmath>
#include <limits>
#include <span>
#include <vector>

namespace evtsir::specfun {

/// Truncation policy shared by every hypergeometric-type series in the library.
struct SeriesControl {
  double rel_tol = 1e-12;    ///< relative stop tolerance
  int max_total_order = 200; ///< cap on the total degree p1+...+pn of inner sums
  int max_outer_p = 500;     ///< cap on the outer p-sum of the SIR CDF series
  int stall_window = 3;      ///< consecutive negligible terms required to stop

  void validate() const; // throws std::invalid_argument on a bad policy
};

/// Outcome of a truncated series evaluation. `converged == false` means the
/// evaluation hit a cap before the stop rule was satisfied; the value is still
/// the best available partial sum and `est_tail` bounds what was left behind.
struct SeriesResult {
  double value = 0.0;
  int terms_used = 0;
  bool converged = false;
  double est_tail = 0.0;
};

/// log-magnitude + sign representation for quantities that overflow doubles.
struct LogSigned {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0; // -1, 0, +1

  double value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }
};

/// ln Gamma(x) for x > 0.
double ln_gamma(double x);

/// Pochhammer symbol (a)_p = Gamma(a+p)/Gamma(a) in log-sign form.
/// Exactly zero (sign 0) when a is a non-positive integer and p > -a.
LogSigned ln_pochhammer(double a, int p);

/// Confluent hypergeometric 1F1(a;b;x). For x < 0 the Kummer reflection
/// 1F1(a;b;x) = e^x 1F1(b-a;b;-x) keeps the summed terms same-signed.
SeriesResult kummer_1f1(double a, double b, double x, const SeriesControl& ctl = {});

/// Lauricella F_D^(n)(a; b1..bn; c; x1..xn), |x_i| < 1, summed by total-degree
/// shells. Terminating first parameter (non-positive integer a) is summed
/// exactly.
SeriesResult lauricella_fd(double a, std::span<const double> b, double c,
                           std::span<const double> x, const SeriesControl& ctl = {});

/// Confluent form E_D^(n)[a; b1..bn; c1, c2; x1..xn] where the first index
/// carries denominator (c1)_{p1} and the remaining indices share
/// (c2)_{p2+...+pn}.
SeriesResult confluent_ed(double a, std::span<const double> b, double c1, double c2,
                          std::span<const double> x, const SeriesControl& ctl = {});

/// Regularized incomplete beta I_u(a, b), u in [0, 1].
double reg_inc_beta(double a, double b, double u);

/// Inverse of reg_inc_beta in u for fixed (a, b).
double reg_inc_beta_inv(double a, double b, double q);

/// Total-degree shell sums of the multivariate Pochhammer product series:
///   S_k = sum_{p1+...+pn = k} prod_i (b_i)_{p_i} (x_i/scale)^{p_i} / p_i!
/// computed by the power-sum recurrence
///   (k+1) S_{k+1} = sum_{j=0..k} c_j S_{k-j},  c_j = sum_i b_i (x_i/scale)^{j+1}.
/// `abs_at(k)` is the same sum over (|b_i|, |x_i|); together with the scale it
/// drives noise-floor estimates for alternating outer sums.
class ShellSums {
 public:
  ShellSums(std::span<const double> b, std::span<const double> x, double scale = 1.0);

  void extend(int k_max);
  double at(int k) const { return s_[static_cast<size_t>(k)]; }
  double abs_at(int k) const { return s_abs_[static_cast<size_t>(k)]; }
  int computed() const { return static_cast<int>(s_.size()) - 1; }
  double log_scale() const { return log_scale_; }

 private:
  std::vector<double> bx_pow_;   // (x_i/scale)^(j+1) running powers per i
  std::vector<double> b_;
  std::vector<double> x_scaled_;
  std::vector<double> c_, c_abs_; // power sums c_j and their |.| version
  std::vector<double> s_, s_abs_;
  double log_scale_ = 0.0;
};

} // namespace evtsir::specfun

#endif // EVTSIR_SPECFUN_HPP
