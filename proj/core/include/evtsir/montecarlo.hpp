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

#ifndef EVTSIR_MONTECARLO_HPP
#define EVTSIR_MONTECARLO_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "evtsir/fading.hpp"
#include "evtsir/random_stream.hpp"

namespace evtsir::mc {

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  long reps = 0;
};

/// Sample mean and s/sqrt(n); requires n >= 2.
Estimate estimate_with_se(std::span<const double> values);

/// One maxima experiment: reps maxima, each over L SIR draws.
struct MaximaStudy {
  fading::Scenario scenario;
  long L = 1;
  long reps = 1;
  std::uint64_t seed = RandomStream::kDefaultSeed;

  void validate() const;
};

/// Deterministic parallel map: out[i] = fn(i, stream_i) where stream_i is the
/// substream keyed by sample index i. Output is bitwise-identical for any
/// worker count; workers <= 0 selects hardware concurrency.
std::vector<double> generate_indexed(long reps, int workers, std::uint64_t seed,
                                     const std::function<double(long, RandomStream&)>& fn);

/// reps maxima, each the max of L sample_sir draws.
std::vector<double> run_maxima_study(const MaximaStudy& study, int workers = 0);

} // namespace evtsir::mc

#endif // EVTSIR_MONTECARLO_HPP
