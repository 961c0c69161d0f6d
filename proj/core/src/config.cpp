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

#include "ddcap/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include "ddcap/errors.hpp"

namespace ddcap {

using nlohmann::json;

const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names{"capacity",     "waterfill",       "sweep",          "check-stability",
                                              "check-hs",     "check-product",   "check-tracenorm"};
  return names;
}

namespace {

std::string join(const std::string& prefix, const std::string& key) { return prefix.empty() ? key : prefix + "." + key; }

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError("expected an object", path.empty() ? "<root>" : path);
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (!ok.count(key)) throw ConfigError("unknown field", join(path, key));
  }
}

double number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError("expected a number", field);
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ConfigError("expected a finite number", field);
  return d;
}

double positive(const json& v, const std::string& field) {
  const double d = number(v, field);
  if (!(d > 0)) throw ConfigError("must be positive", field);
  return d;
}

double non_negative(const json& v, const std::string& field) {
  const double d = number(v, field);
  if (!(d >= 0)) throw ConfigError("must be >= 0", field);
  return d;
}

std::string text(const json& v, const std::string& field) {
  if (!v.is_string()) throw ConfigError("expected a string", field);
  return v.get<std::string>();
}

std::vector<double> number_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError("expected an array of numbers", field);
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

bool needs_alphas(const std::string& command) { return command != "waterfill"; }

}  // namespace

RunConfig parse_config(const json& doc) {
  reject_unknown(doc, "",
                 {"schema_version", "command", "symbol", "power_S", "alphas", "grid", "eps_schedule", "s_values", "s",
                  "eigs", "alpha", "function", "output"});
  RunConfig cfg;
  if (doc.contains("schema_version")) {
    const json& v = doc["schema_version"];
    if (!v.is_number_integer() || v.get<int>() != kSchemaVersion) {
      throw ConfigError("unsupported schema version (expected 1)", "schema_version");
    }
  }
  if (!doc.contains("command")) throw ConfigError("missing required field", "command");
  cfg.command = text(doc["command"], "command");
  const auto& cmds = known_commands();
  if (std::find(cmds.begin(), cmds.end(), cfg.command) == cmds.end()) {
    throw ConfigError("unknown command '" + cfg.command + "'", "command");
  }

  if (doc.contains("symbol")) {
    const json& sym = doc["symbol"];
    reject_unknown(sym, "symbol", {"family", "params"});
    if (sym.contains("family")) cfg.family = text(sym["family"], "symbol.family");
    if (sym.contains("params")) {
      const json& p = sym["params"];
      if (!p.is_object()) throw ConfigError("expected an object", "symbol.params");
      for (const auto& [key, value] : p.items()) cfg.params[key] = number(value, "symbol.params." + key);
    }
  }
  try {
    make_symbol(cfg.family, cfg.params);
  } catch (const ConfigError& e) {
    throw ConfigError(e.what(), "symbol");
  } catch (const DomainError& e) {
    throw ConfigError(e.what(), "symbol.params");
  }

  if (doc.contains("power_S")) cfg.power_S = non_negative(doc["power_S"], "power_S");
  if (doc.contains("alphas")) {
    cfg.alphas = number_list(doc["alphas"], "alphas");
    for (std::size_t i = 0; i < cfg.alphas.size(); ++i) {
      if (!(cfg.alphas[i] > 0)) throw ConfigError("must be positive", "alphas[" + std::to_string(i) + "]");
    }
  }
  if (needs_alphas(cfg.command) && cfg.alphas.empty()) throw ConfigError("must not be empty", "alphas");

  if (doc.contains("grid")) {
    const json& g = doc["grid"];
    reject_unknown(g, "grid", {"h_x", "omega_max", "padding_m", "quad_density", "omega_refine", "hs_padding_factor"});
    if (g.contains("h_x")) cfg.grid.h_x = positive(g["h_x"], "grid.h_x");
    if (g.contains("omega_max")) cfg.grid.omega_max = positive(g["omega_max"], "grid.omega_max");
    if (g.contains("padding_m")) cfg.grid.padding_m = non_negative(g["padding_m"], "grid.padding_m");
    if (g.contains("quad_density")) cfg.quad_density = positive(g["quad_density"], "grid.quad_density");
    if (g.contains("omega_refine")) {
      if (!g["omega_refine"].is_number_integer() || g["omega_refine"].get<int>() < 1) {
        throw ConfigError("expected an integer >= 1", "grid.omega_refine");
      }
      cfg.grid.omega_refine = g["omega_refine"].get<int>();
    }
    if (g.contains("hs_padding_factor")) {
      cfg.hs_padding_factor = non_negative(g["hs_padding_factor"], "grid.hs_padding_factor");
    }
  }
  if (2.0 * cfg.grid.h_x * cfg.grid.omega_max > 1.0 + 1e-12) {
    throw AliasingError("2 * h_x * omega_max exceeds 1", "grid");
  }

  if (doc.contains("eps_schedule")) {
    const json& e = doc["eps_schedule"];
    reject_unknown(e, "eps_schedule", {"mode", "eps", "delta"});
    if (e.contains("mode")) {
      const std::string mode = text(e["mode"], "eps_schedule.mode");
      if (mode == "none") {
        cfg.eps_schedule.mode = EpsSchedule::Mode::none;
      } else if (mode == "fixed") {
        cfg.eps_schedule.mode = EpsSchedule::Mode::fixed;
      } else if (mode == "power") {
        cfg.eps_schedule.mode = EpsSchedule::Mode::power;
      } else {
        throw ConfigError("expected none, fixed or power", "eps_schedule.mode");
      }
    }
    if (e.contains("eps")) cfg.eps_schedule.eps = positive(e["eps"], "eps_schedule.eps");
    if (e.contains("delta")) cfg.eps_schedule.delta = positive(e["delta"], "eps_schedule.delta");
  }

  if (doc.contains("s_values")) cfg.s_values = number_list(doc["s_values"], "s_values");
  if (doc.contains("s")) cfg.s = number(doc["s"], "s");
  if (doc.contains("eigs")) cfg.eigs = number_list(doc["eigs"], "eigs");
  if (cfg.command == "waterfill" && cfg.eigs.empty()) throw ConfigError("missing required field", "eigs");
  if (doc.contains("alpha")) cfg.alpha = positive(doc["alpha"], "alpha");

  if (doc.contains("function")) {
    const json& f = doc["function"];
    reject_unknown(f, "function", {"kind", "eps", "scale", "support_hi"});
    if (f.contains("kind")) {
      cfg.function.kind = text(f["kind"], "function.kind");
      static const std::set<std::string> kinds{"f_eps_log", "f_eps_ratio", "r", "square", "linear"};
      if (!kinds.count(cfg.function.kind)) throw ConfigError("unknown function kind", "function.kind");
    }
    if (f.contains("eps")) cfg.function.eps = positive(f["eps"], "function.eps");
    if (f.contains("scale")) cfg.function.scale = positive(f["scale"], "function.scale");
    if (f.contains("support_hi")) cfg.function.support_hi = positive(f["support_hi"], "function.support_hi");
  }

  if (doc.contains("output")) {
    const json& o = doc["output"];
    reject_unknown(o, "output", {"path", "format"});
    if (o.contains("path")) cfg.output_path = text(o["path"], "output.path");
    if (o.contains("format")) {
      cfg.format = text(o["format"], "output.format");
      if (cfg.format != "json" && cfg.format != "csv") throw ConfigError("expected json or csv", "output.format");
    }
  }
  return cfg;
}

json load_config_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ReadError("cannot read config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what(), "<root>");
  }
}

json to_json(const RunConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = cfg.command;
  j["symbol"] = {{"family", cfg.family}, {"params", make_symbol(cfg.family, cfg.params).params}};
  j["power_S"] = cfg.power_S;
  j["alphas"] = cfg.alphas;
  j["grid"] = {{"h_x", cfg.grid.h_x},
               {"omega_max", cfg.grid.omega_max},
               {"padding_m", cfg.grid.padding_m},
               {"quad_density", cfg.quad_density},
               {"omega_refine", cfg.grid.omega_refine},
               {"hs_padding_factor", cfg.hs_padding_factor}};
  const char* mode = cfg.eps_schedule.mode == EpsSchedule::Mode::none    ? "none"
                     : cfg.eps_schedule.mode == EpsSchedule::Mode::fixed ? "fixed"
                                                                         : "power";
  j["eps_schedule"] = {{"mode", mode}, {"eps", cfg.eps_schedule.eps}, {"delta", cfg.eps_schedule.delta}};
  j["s_values"] = cfg.s_values;
  j["s"] = cfg.s;
  j["eigs"] = cfg.eigs;
  j["alpha"] = cfg.alpha;
  json f{{"kind", cfg.function.kind}, {"eps", cfg.function.eps}, {"support_hi", cfg.function.support_hi}};
  if (cfg.function.scale) f["scale"] = *cfg.function.scale;
  j["function"] = f;
  j["output"] = {{"path", cfg.output_path}, {"format", cfg.format}};
  return j;
}

HarnessConfig harness_config(const RunConfig& cfg) {
  HarnessConfig h;
  h.grid = cfg.grid;
  h.quad = QuadratureConfig::from_density(cfg.quad_density, cfg.grid.omega_max);
  h.eps = cfg.eps_schedule;
  h.s_values = cfg.s_values;
  h.hs_padding_factor = cfg.hs_padding_factor;
  return h;
}

}  // namespace ddcap
