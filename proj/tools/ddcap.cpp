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

// Command-line front end for the ddcap experiments.
//
// Exit codes: 0 success, 2 configuration error, 3 read error, 4 write
// error, 5 numerical failure (also used when any alpha of a sweep failed).

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ddcap/config.hpp"
#include "ddcap/errors.hpp"
#include "ddcap/harness.hpp"
#include "ddcap/report.hpp"
#include "ddcap/symbols.hpp"
#include "ddcap/waterfill.hpp"

namespace {

using nlohmann::json;

enum Exit { kOk = 0, kConfig = 2, kRead = 3, kWrite = 4, kNumerical = 5 };

ddcap::RealFunction stability_function(const ddcap::RunConfig& cfg, const ddcap::SymbolSpec& spec) {
  const auto& fc = cfg.function;
  const double scale = fc.scale ? *fc.scale : ddcap::waterfill_symbol(spec, cfg.power_S, ddcap::harness_config(cfg).quad).B;
  ddcap::FEpsOptions opts;
  opts.support_hi = fc.support_hi;
  if (fc.kind == "f_eps_log") return ddcap::scaled(ddcap::build_f_eps(ddcap::RateShape::log, fc.eps, opts), scale);
  if (fc.kind == "f_eps_ratio") return ddcap::scaled(ddcap::build_f_eps(ddcap::RateShape::ratio, fc.eps, opts), scale);
  if (fc.kind == "r") return ddcap::scaled(ddcap::rate_r_function(), scale);
  if (fc.kind == "square") return ddcap::square_function();
  return ddcap::linear_function(1.0);
}

int run_waterfill(const ddcap::RunConfig& cfg) {
  const auto sol = ddcap::waterfill_discrete(cfg.eigs, cfg.power_S, cfg.alpha);
  std::printf("B=%.17g capacity=%.17g power=%.17g active=%zu\n", sol.B, sol.capacity_rate, sol.power_achieved,
              sol.active_count);
  if (!cfg.output_path.empty()) {
    json j{{"B", sol.B},
           {"capacity_rate", sol.capacity_rate},
           {"power_achieved", sol.power_achieved},
           {"active_count", sol.active_count},
           {"config", ddcap::to_json(cfg)}};
    std::FILE* f = std::fopen(cfg.output_path.c_str(), "wb");
    if (!f) throw ddcap::WriteError("cannot open '" + cfg.output_path + "' for writing");
    const std::string text = j.dump(2) + "\n";
    const bool ok = std::fwrite(text.data(), 1, text.size(), f) == text.size();
    if (std::fclose(f) != 0 || !ok) throw ddcap::WriteError("failed writing '" + cfg.output_path + "'");
  }
  return kOk;
}

int dispatch(const ddcap::RunConfig& cfg) {
  if (cfg.command == "waterfill") return run_waterfill(cfg);
  const ddcap::SymbolSpec spec = ddcap::make_symbol(cfg.family, cfg.params);
  const ddcap::HarnessConfig hc = ddcap::harness_config(cfg);
  ddcap::SweepReport report;
  if (cfg.command == "capacity") {
    report = ddcap::run_capacity(spec, cfg.power_S, cfg.alphas, hc);
  } else if (cfg.command == "sweep") {
    report = ddcap::run_convergence_sweep(spec, cfg.power_S, cfg.alphas, hc);
  } else if (cfg.command == "check-stability") {
    report = ddcap::run_stability_check(spec, stability_function(cfg, spec), cfg.alphas, hc);
  } else if (cfg.command == "check-hs") {
    report = ddcap::run_hs_boundary_check(spec, cfg.alphas, hc);
  } else if (cfg.command == "check-product") {
    report = ddcap::run_symbol_calculus_check(spec, cfg.s_values, cfg.alphas, hc);
  } else {
    report = ddcap::run_trace_norm_scaling(spec, cfg.s, cfg.alphas, hc);
  }
  ddcap::write_report(report, cfg);
  for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
  int code = kOk;
  for (const auto& r : report.records) {
    if (r.status != "ok") {
      std::cerr << "alpha=" << r.alpha << ": " << r.status << "\n";
      code = kNumerical;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ddcap: capacity experiments for doubly-dispersive channels"};
  std::string command;
  std::string config_path;
  std::string family;
  std::string output;
  std::string format;
  double power_s = 0;
  double s = 0;
  std::vector<double> alphas;
  std::vector<double> eigs;
  app.add_option("command", command, "capacity, waterfill, sweep, check-stability, check-hs, check-product, check-tracenorm");
  app.add_option("-c,--config", config_path, "JSON run configuration");
  auto* o_power = app.add_option("--power-S", power_s, "power budget per unit time");
  auto* o_alphas = app.add_option("--alphas", alphas, "interval lengths");
  app.add_option("--family", family, "symbol family");
  auto* o_eigs = app.add_option("--eigs", eigs, "eigenvalues for the waterfill command");
  auto* o_s = app.add_option("--s", s, "phase scale for check-tracenorm");
  app.add_option("-o,--output", output, "output file (stdout when omitted)");
  app.add_option("--format", format, "json or csv");
  CLI11_PARSE(app, argc, argv);

  try {
    json doc = config_path.empty() ? json::object() : ddcap::load_config_document(config_path);
    json patch = json::object();
    if (!command.empty()) patch["command"] = command;
    if (!family.empty()) patch["symbol"]["family"] = family;
    if (*o_power) patch["power_S"] = power_s;
    if (*o_alphas) patch["alphas"] = alphas;
    if (*o_eigs) patch["eigs"] = eigs;
    if (*o_s) patch["s"] = s;
    if (!output.empty()) patch["output"]["path"] = output;
    if (!format.empty()) patch["output"]["format"] = format;
    if (doc.is_object()) doc.merge_patch(patch);
    const ddcap::RunConfig cfg = ddcap::parse_config(doc);
    return dispatch(cfg);
  } catch (const ddcap::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfig;
  } catch (const ddcap::ReadError& e) {
    std::cerr << "read error: " << e.what() << "\n";
    return kRead;
  } catch (const ddcap::WriteError& e) {
    std::cerr << "write error: " << e.what() << "\n";
    return kWrite;
  } catch (const ddcap::Error& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kNumerical;
  }
}
