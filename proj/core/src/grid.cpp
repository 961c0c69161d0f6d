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

#include "ddcap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ddcap/errors.hpp"

namespace ddcap {

namespace {

// Returns v/step rounded, throwing when v is not an integer multiple of step.
long as_multiple(double v, double step, const char* what) {
  const double q = v / step;
  const double r = std::round(q);
  if (std::abs(q - r) > 1e-9 * std::max(1.0, std::abs(q))) {
    throw ConfigError(std::string(what) + " must be an integer multiple of h_x", "grid");
  }
  return static_cast<long>(r);
}

}  // namespace

Grid Grid::make(double alpha, const GridConfig& cfg) {
  return make_padded(alpha, cfg.padding_m, cfg);
}

Grid Grid::make_padded(double alpha, double padding, const GridConfig& cfg) {
  if (!(alpha > 0)) throw ConfigError("alpha must be positive", "alpha");
  if (!(cfg.h_x > 0)) throw ConfigError("must be positive", "grid.h_x");
  if (!(cfg.omega_max > 0)) throw ConfigError("must be positive", "grid.omega_max");
  if (!(padding >= 0)) throw ConfigError("must be non-negative", "grid.padding_m");
  if (cfg.omega_refine < 1) throw ConfigError("must be >= 1", "grid.omega_refine");
  if (2.0 * cfg.h_x * cfg.omega_max > 1.0 + 1e-12) {
    throw AliasingError("grid too coarse: 2*h_x*omega_max = " +
                            std::to_string(2.0 * cfg.h_x * cfg.omega_max) + " exceeds 1",
                        "grid");
  }

  const long n_pad = as_multiple(padding, cfg.h_x, "padding");
  const long n_alpha = as_multiple(alpha, cfg.h_x, "alpha");

  Grid g;
  g.alpha = alpha;
  g.h_x = cfg.h_x;
  g.x_min = -static_cast<double>(n_pad) * cfg.h_x;
  g.n_x = static_cast<std::size_t>(n_alpha + 2 * n_pad);
  g.x_max = g.x_min + static_cast<double>(g.n_x) * cfg.h_x;
  g.first_inside = static_cast<std::size_t>(n_pad);
  g.count_inside = static_cast<std::size_t>(n_alpha);
  g.dft_length = static_cast<std::size_t>(cfg.omega_refine) * g.n_x;
  g.h_omega = 1.0 / (static_cast<double>(g.dft_length) * cfg.h_x);
  const auto half = static_cast<long>(std::floor(cfg.omega_max / g.h_omega + 1e-9));
  g.omega_max = static_cast<double>(half) * g.h_omega;
  g.n_omega = static_cast<std::size_t>(2 * half + 1);
  return g;
}

double Grid::omega(std::size_t m) const { return static_cast<double>(omega_index(m)) * h_omega; }

long Grid::omega_index(std::size_t m) const {
  return static_cast<long>(m) - static_cast<long>(n_omega / 2);
}

double Grid::omega_weight(std::size_t m) const {
  return (m == 0 || m + 1 == n_omega) ? 0.5 * h_omega : h_omega;
}

}  // namespace ddcap
