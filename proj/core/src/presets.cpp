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

#include "evtsir/presets.hpp"

#include <array>
#include <utility>

namespace evtsir::presets {

namespace {

using fading::FadingParams;
using fading::Scenario;

FadingParams fp(double kappa, double mu, double m, double power = 1.0) {
  return {kappa, mu, m, power};
}

Scenario rayleigh(int n) {
  Scenario s;
  s.source = fp(0, 1, 1);
  s.interferers.assign(static_cast<size_t>(n), fp(0, 1, 1));
  return s;
}

const std::array<std::pair<std::string_view, Scenario (*)()>, 11> kPresets = {{
    {"table1-rayleigh-n1", [] { return rayleigh(1); }},
    {"table1-rayleigh-n2", [] { return rayleigh(2); }},
    {"table1-rayleigh-n3", [] { return rayleigh(3); }},
    // shadowed CDF showcase, case 2: beta = 2
    {"table1-beta2",
     [] { return Scenario{fp(2, 1, 2), {fp(2, 1, 2), fp(2, 1, 1)}}; }},
    // shadowed CDF showcase, case 1: beta = 3
    {"table1-beta3",
     [] { return Scenario{fp(2, 2, 3), {fp(2, 2, 3), fp(2, 1, 2)}}; }},
    // moment-figure source with the moment-figure interferer doubled: beta = 4
    {"table1-beta4",
     [] { return Scenario{fp(2, 3, 2), {fp(2, 2, 3), fp(2, 2, 3)}}; }},
    // moment/rate figure: beta = 2 with a single interferer
    {"fig-moment", [] { return Scenario{fp(2, 3, 2), {fp(2, 2, 3)}}; }},
    {"fig-rate", [] { return Scenario{fp(2, 3, 2), {fp(2, 2, 3)}}; }},
    // FAS figures: m = 1 source, one and two interferers
    {"fig-fas-n1", [] { return Scenario{fp(2, 3, 1), {fp(2, 1, 1)}}; }},
    {"fig-fas-n2", [] { return Scenario{fp(2, 3, 1), {fp(2, 1, 1), fp(2, 2, 1)}}; }},
    // source-variation probes share this interferer
    {"fig-obs-interferer", [] { return Scenario{fp(2, 2, 2), {fp(2, 3, 1)}}; }},
}};

} // namespace

std::optional<fading::Scenario> find(std::string_view name) {
  for (const auto& [key, make] : kPresets)
    if (key == name) return make();
  return std::nullopt;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  out.reserve(kPresets.size());
  for (const auto& [key, make] : kPresets) out.emplace_back(key);
  return out;
}

} // namespace evtsir::presets
