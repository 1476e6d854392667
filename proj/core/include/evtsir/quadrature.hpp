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

#ifndef EVTSIR_QUADRATURE_HPP
#define EVTSIR_QUADRATURE_HPP

#include <functional>

namespace evtsir::quadrature {

/// Node-doubling policy for the double-exponential rule: refinement stops when
/// two successive levels agree to rel_tol.
struct QuadratureControl {
  double rel_tol = 1e-9;
  int max_levels = 12;
  double t_max = 6.0; // hard window of the exp-sinh variable
};

struct QuadratureResult {
  double value = 0.0;
  int levels = 0;
  long evals = 0;
  bool converged = false;
  double last_delta = 0.0;
};

/// Integrates f over (0, inf) with the exp-sinh substitution x = exp(pi/2 sinh t).
/// Handles integrable endpoint singularities (log growth at 0) and integrands
/// with exponential decay at infinity.
QuadratureResult integrate_exp_sinh(const std::function<double(double)>& f,
                                    const QuadratureControl& ctl = {});

} // namespace evtsir::quadrature

#endif // EVTSIR_QUADRATURE_HPP
