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

#ifndef EVTSIR_RANDOM_STREAM_HPP
#define EVTSIR_RANDOM_STREAM_HPP

#include <array>
#include <cstdint>

namespace evtsir::mc {

/// Counter-based random stream (Philox 4x32-10). The draw at
/// (seed, stream_id, position) is a pure function of the triple, so any
/// partition of work across threads that assigns sample indices -- not loop
/// order -- to (stream_id, position) reproduces bitwise-identical results.
class RandomStream {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

  explicit RandomStream(std::uint64_t seed = kDefaultSeed, std::uint64_t stream_id = 0,
                        std::uint64_t position = 0)
      : seed_(seed), stream_(stream_id), pos_(position) {}

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_; }
  std::uint64_t position() const { return pos_; }

  /// Derived stream with an independent id; deterministic in (seed, id).
  RandomStream substream(std::uint64_t id) const;

  std::uint64_t next_u64();

  /// Uniform on the open interval (0, 1).
  double uniform();

  /// Standard normal (Box-Muller, fixed two-uniform cost).
  double normal();

  /// Unit-mean exponential.
  double exponential();

  /// Gamma variate, Marsaglia-Tsang for shape >= 1 with the power boost below 1.
  double gamma(double shape, double scale = 1.0);

  /// Poisson count by the exponential-race construction (exact for any mean).
  std::uint64_t poisson(double mean);

 private:
  std::array<std::uint32_t, 4> block(std::uint64_t index) const;

  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t pos_;
};

} // namespace evtsir::mc

#endif // EVTSIR_RANDOM_STREAM_HPP
