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

#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ddcap/config.hpp"
#include "ddcap/harness.hpp"

namespace ddcap {

// CSV header, in order.
const std::vector<std::string>& csv_columns();

// One row per alpha, 17 significant digits, empty cells for values that
// were not computed.
void write_csv(const SweepReport& report, std::ostream& out);

// Nested report with records, fits, warnings and the resolved config.
// NaN is written as null.
nlohmann::json report_to_json(const SweepReport& report, const nlohmann::json& config_echo = nullptr);
SweepReport report_from_json(const nlohmann::json& doc);

// Writes to cfg.output_path in cfg.format, or to stdout when the path is
// empty. Throws WriteError when the file cannot be written.
void write_report(const SweepReport& report, const RunConfig& cfg);

}  // namespace ddcap
