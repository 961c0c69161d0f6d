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

#include "ddcap/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ddcap/errors.hpp"

namespace ddcap {

using nlohmann::json;

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols{
      "alpha",         "capacity_discrete", "capacity_symbol", "error_total", "error_stability",
      "error_calculus", "hs_cross_norm",    "q_alpha_s0.25",   "q_alpha_s0.5", "q_alpha_s1.0",
      "tp_i1",         "tp_i2",             "eps",             "hermitian_defect"};
  return cols;
}

namespace {

std::string cell(double v) {
  if (std::isnan(v)) return {};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double q_at(const AlphaRecord& r, double s) {
  const auto it = r.q_alpha.find(s);
  return it == r.q_alpha.end() ? kNotComputed : it->second;
}

json num(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

double read_num(const json& j, const char* key) {
  if (!j.contains(key) || j[key].is_null()) return kNotComputed;
  return j[key].get<double>();
}

json fit_json(const LineFit& f) {
  return {{"slope", num(f.slope)},       {"intercept", num(f.intercept)}, {"slope_stderr", num(f.slope_stderr)},
          {"ci_low", num(f.ci_low)},     {"ci_high", num(f.ci_high)},     {"rss", num(f.rss)},
          {"n", f.n}};
}

}  // namespace

void write_csv(const SweepReport& report, std::ostream& out) {
  const auto& cols = csv_columns();
  for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c];
  out << "\n";
  for (const auto& r : report.records) {
    const double row[] = {r.alpha,          r.capacity_discrete, r.capacity_symbol, r.error_total,
                          r.error_stability, r.error_calculus,   r.hs_cross_norm,   q_at(r, 0.25),
                          q_at(r, 0.5),     q_at(r, 1.0),        r.tp_i1,           r.tp_i2,
                          r.eps,            r.hermitian_defect};
    for (std::size_t c = 0; c < std::size(row); ++c) out << (c ? "," : "") << cell(row[c]);
    out << "\n";
  }
}

json report_to_json(const SweepReport& report, const json& config_echo) {
  json records = json::array();
  for (const auto& r : report.records) {
    json q = json::array();
    for (const auto& [s, v] : r.q_alpha) q.push_back({{"s", s}, {"value", num(v)}});
    records.push_back({{"alpha", num(r.alpha)},
                       {"capacity_discrete", num(r.capacity_discrete)},
                       {"capacity_symbol", num(r.capacity_symbol)},
                       {"capacity_error", num(r.capacity_error)},
                       {"water_level_discrete", num(r.water_level_discrete)},
                       {"water_level_symbol", num(r.water_level_symbol)},
                       {"error_total", num(r.error_total)},
                       {"error_stability", num(r.error_stability)},
                       {"error_calculus", num(r.error_calculus)},
                       {"hs_cross_norm", num(r.hs_cross_norm)},
                       {"hs_row_norm", num(r.hs_row_norm)},
                       {"hs_row_bound", num(r.hs_row_bound)},
                       {"q_alpha", q},
                       {"tp_i1", num(r.tp_i1)},
                       {"tp_i2", num(r.tp_i2)},
                       {"tpp_i1", num(r.tpp_i1)},
                       {"tpp_i2", num(r.tpp_i2)},
                       {"stability_ratio", num(r.stability_ratio)},
                       {"f2_norm", num(r.f2_norm)},
                       {"eps", num(r.eps)},
                       {"hermitian_defect", num(r.hermitian_defect)},
                       {"min_eigenvalue", num(r.min_eigenvalue)},
                       {"n_x", r.n_x},
                       {"status", r.status}});
  }
  json fits = json::array();
  for (const auto& f : report.fits) {
    fits.push_back({{"quantity", f.quantity}, {"model", f.model}, {"dropped_first", f.dropped_first},
                    {"fit", fit_json(f.fit)}});
  }
  json j;
  j["experiment"] = report.experiment;
  j["symbol"] = {{"family", report.symbol_family}, {"params", report.symbol_params}};
  j["power_S"] = num(report.power_S);
  j["records"] = records;
  j["fits"] = fits;
  j["warnings"] = report.warnings;
  j["config"] = config_echo;
  return j;
}

SweepReport report_from_json(const json& doc) {
  SweepReport r;
  try {
    r.experiment = doc.at("experiment").get<std::string>();
    r.symbol_family = doc.at("symbol").at("family").get<std::string>();
    r.symbol_params = doc.at("symbol").at("params").get<std::map<std::string, double>>();
    r.power_S = read_num(doc, "power_S");
    for (const auto& j : doc.at("records")) {
      AlphaRecord a;
      a.alpha = read_num(j, "alpha");
      a.capacity_discrete = read_num(j, "capacity_discrete");
      a.capacity_symbol = read_num(j, "capacity_symbol");
      a.capacity_error = read_num(j, "capacity_error");
      a.water_level_discrete = read_num(j, "water_level_discrete");
      a.water_level_symbol = read_num(j, "water_level_symbol");
      a.error_total = read_num(j, "error_total");
      a.error_stability = read_num(j, "error_stability");
      a.error_calculus = read_num(j, "error_calculus");
      a.hs_cross_norm = read_num(j, "hs_cross_norm");
      a.hs_row_norm = read_num(j, "hs_row_norm");
      a.hs_row_bound = read_num(j, "hs_row_bound");
      for (const auto& q : j.at("q_alpha")) a.q_alpha[q.at("s").get<double>()] = read_num(q, "value");
      a.tp_i1 = read_num(j, "tp_i1");
      a.tp_i2 = read_num(j, "tp_i2");
      a.tpp_i1 = read_num(j, "tpp_i1");
      a.tpp_i2 = read_num(j, "tpp_i2");
      a.stability_ratio = read_num(j, "stability_ratio");
      a.f2_norm = read_num(j, "f2_norm");
      a.eps = read_num(j, "eps");
      a.hermitian_defect = read_num(j, "hermitian_defect");
      a.min_eigenvalue = read_num(j, "min_eigenvalue");
      a.n_x = j.at("n_x").get<std::size_t>();
      a.status = j.at("status").get<std::string>();
      r.records.push_back(std::move(a));
    }
    for (const auto& j : doc.at("fits")) {
      NamedFit f;
      f.quantity = j.at("quantity").get<std::string>();
      f.model = j.at("model").get<std::string>();
      f.dropped_first = j.at("dropped_first").get<bool>();
      const json& l = j.at("fit");
      f.fit.slope = read_num(l, "slope");
      f.fit.intercept = read_num(l, "intercept");
      f.fit.slope_stderr = read_num(l, "slope_stderr");
      f.fit.ci_low = read_num(l, "ci_low");
      f.fit.ci_high = read_num(l, "ci_high");
      f.fit.rss = read_num(l, "rss");
      f.fit.n = l.at("n").get<std::size_t>();
      r.fits.push_back(f);
    }
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what(), "report");
  }
  return r;
}

void write_report(const SweepReport& report, const RunConfig& cfg) {
  std::ostringstream body;
  if (cfg.format == "csv") {
    write_csv(report, body);
  } else {
    body << report_to_json(report, to_json(cfg)).dump(2) << "\n";
  }
  if (cfg.output_path.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(cfg.output_path, std::ios::binary);
  if (!out) throw WriteError("cannot open '" + cfg.output_path + "' for writing");
  out << body.str();
  out.flush();
  if (!out) throw WriteError("failed writing '" + cfg.output_path + "'");
}

}  // namespace ddcap
