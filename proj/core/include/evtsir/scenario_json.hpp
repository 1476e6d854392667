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

#ifndef EVTSIR_SCENARIO_JSON_HPP
#define EVTSIR_SCENARIO_JSON_HPP

#include <string>

#include "evtsir/fading.hpp"

namespace evtsir::fading {

/// Canonical JSON form consumed by the CLI:
/// {"source": {"kappa","mu","m","mean_power"}, "interferers": [ ... ]}
std::string scenario_to_json(const Scenario& s);
Scenario scenario_from_json(const std::string& text);

} // namespace evtsir::fading

#endif // EVTSIR_SCENARIO_JSON_HPP
