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

#ifndef EVTSIR_ERRORS_HPP
#define EVTSIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace evtsir {

/// Numeric failure (series non-convergence, bracket failure, quadrature
/// non-convergence). The message carries the diagnostics of the attempt.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace evtsir

#endif // EVTSIR_ERRORS_HPP
