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

#include "evtsir/scenario_json.hpp"

#include <json.hpp>

namespace evtsir::fading {

namespace {

nlohmann::json params_to_json(const FadingParams& p) {
  return {{"kappa", p.kappa}, {"mu", p.mu}, {"m", p.m}, {"mean_power", p.mean_power}};
}

FadingParams params_from_json(const nlohmann::json& j) {
  FadingParams p;
  p.kappa = j.at("kappa").get<double>();
  p.mu = j.at("mu").get<double>();
  p.m = j.at("m").get<double>();
  p.mean_power = j.at("mean_power").get<double>();
  return p;
}

} // namespace

std::string scenario_to_json(const Scenario& s) {
  nlohmann::json j;
  j["source"] = params_to_json(s.source);
  j["interferers"] = nlohmann::json::array();
  for (const auto& p : s.interferers) j["interferers"].push_back(params_to_json(p));
  return j.dump();
}

Scenario scenario_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Scenario s;
  s.source = params_from_json(j.at("source"));
  for (const auto& e : j.at("interferers")) s.interferers.push_back(params_from_json(e));
  s.validate();
  return s;
}

} // namespace evtsir::fading
