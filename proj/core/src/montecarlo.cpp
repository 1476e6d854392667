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

#include "evtsir/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace evtsir::mc {

Estimate estimate_with_se(std::span<const double> values) {
  const long n = static_cast<long>(values.size());
  if (n < 2) throw std::invalid_argument("estimate_with_se: requires n >= 2");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  const double var = ss / static_cast<double>(n - 1);
  return {mean, std::sqrt(var / static_cast<double>(n)), n};
}

void MaximaStudy::validate() const {
  scenario.validate();
  if (L < 1) throw std::invalid_argument("MaximaStudy: L must be >= 1");
  if (reps < 1) throw std::invalid_argument("MaximaStudy: reps must be >= 1");
}

std::vector<double> generate_indexed(long reps, int workers, std::uint64_t seed,
                                     const std::function<double(long, RandomStream&)>& fn) {
  if (reps < 0) throw std::invalid_argument("generate_indexed: reps must be >= 0");
  std::vector<double> out(static_cast<size_t>(reps));
  if (reps == 0) return out;
  int nw = workers > 0 ? workers
                       : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  nw = static_cast<int>(std::min<long>(nw, reps));

  auto run_range = [&](long lo, long hi) {
    for (long i = lo; i < hi; ++i) {
      RandomStream stream(seed, static_cast<std::uint64_t>(i));
      out[static_cast<size_t>(i)] = fn(i, stream);
    }
  };
  if (nw == 1) {
    run_range(0, reps);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(nw));
  const long chunk = (reps + nw - 1) / nw;
  for (int w = 0; w < nw; ++w) {
    const long lo = static_cast<long>(w) * chunk;
    const long hi = std::min(reps, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(run_range, lo, hi);
  }
  for (auto& t : pool) t.join();
  return out;
}

std::vector<double> run_maxima_study(const MaximaStudy& study, int workers) {
  study.validate();
  const auto& scenario = study.scenario;
  const long L = study.L;
  return generate_indexed(study.reps, workers, study.seed,
                          [&scenario, L](long, RandomStream& stream) {
                            double best = 0.0;
                            for (long j = 0; j < L; ++j)
                              best = std::max(best, fading::sample_sir(scenario, stream));
                            return best;
                          });
}

} // namespace evtsir::mc
