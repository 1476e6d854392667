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

#ifndef EVTSIR_PRESETS_HPP
#define EVTSIR_PRESETS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evtsir/fading.hpp"

namespace evtsir::presets {

/// Named scenarios covering the benchmark tables and figure captions so that
/// reproduction commands need no manual parameter entry. Unit mean powers
/// throughout.
std::optional<fading::Scenario> find(std::string_view name);

std::vector<std::string> names();

} // namespace evtsir::presets

#endif // EVTSIR_PRESETS_HPP
