// SPDX-License-Identifier: Apache-2.0
//
// ddcap: capacity of doubly-dispersive Gaussian channels
// Copyright (C) 2026 The ddcap authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddcap/grid.hpp"
#include "ddcap/harness.hpp"
#include "ddcap/symbols.hpp"

namespace ddcap {

inline constexpr int kSchemaVersion = 1;

const std::vector<std::string>& known_commands();

// Function handed to check-stability.
struct FunctionConfig {
  std::string kind = "f_eps_log";  // f_eps_log, f_eps_ratio, r, square, linear
  double eps = 0.1;
  std::optional<double> scale;  // defaults to the continuous water level for power_S
  double support_hi = 16.0;
};

struct RunConfig {
  std::string command;
  std::string family = "band_constant";
  std::map<std::string, double> params;
  double power_S = 1.0;
  std::vector<double> alphas{8, 16, 32, 64};
  GridConfig grid;
  double quad_density = 4.0;
  double hs_padding_factor = 1.0;
  EpsSchedule eps_schedule;
  std::vector<double> s_values{0.25, 0.5, 1.0};
  double s = 0.5;
  std::vector<double> eigs;  // waterfill
  double alpha = 1.0;        // waterfill normalizer
  FunctionConfig function;
  std::string output_path;  // empty writes to stdout
  std::string format = "json";
};

// Strict parse: unknown fields, wrong types and out-of-range values throw
// ConfigError naming the field path.
RunConfig parse_config(const nlohmann::json& doc);

// Reads a JSON document from disk; ReadError when the file cannot be read,
// ConfigError when it is not valid JSON.
nlohmann::json load_config_document(const std::string& path);

// Fully resolved configuration, including defaults.
nlohmann::json to_json(const RunConfig& cfg);

HarnessConfig harness_config(const RunConfig& cfg);

}  // namespace ddcap
