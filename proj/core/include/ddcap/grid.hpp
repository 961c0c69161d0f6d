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

#include <cstddef>

namespace ddcap {

struct GridConfig {
  double h_x = 1.0 / 16.0;
  double omega_max = 8.0;
  double padding_m = 8.0;
  // h_omega = 1 / (omega_refine * (x_max - x_min)). The kernel produced by
  // omega quadrature is periodic in the offset with period 1/h_omega, so a
  // refine factor of 2 keeps every offset of the padded domain unaliased.
  int omega_refine = 2;
};

// Uniform time grid on the padded domain [x_min, x_max) together with the
// truncated, uniformly sampled frequency axis [-omega_max, omega_max].
//
// Time nodes are x_i = x_min + i*h_x for i = 0..n_x-1, so n_x*h_x equals
// x_max - x_min. Both 0 and alpha are nodes; the interval projection covers
// the half-open range [0, alpha), which holds exactly alpha/h_x nodes.
struct Grid {
  double alpha = 0;
  double x_min = 0;
  double x_max = 0;
  double h_x = 0;
  double omega_max = 0;
  double h_omega = 0;
  std::size_t n_x = 0;
  std::size_t n_omega = 0;  // includes both endpoints +-omega_max
  std::size_t dft_length = 0;  // 1 / (h_x * h_omega)
  std::size_t first_inside = 0;
  std::size_t count_inside = 0;

  static Grid make(double alpha, const GridConfig& cfg = {});
  // Padded domain [-padding, alpha + padding).
  static Grid make_padded(double alpha, double padding, const GridConfig& cfg = {});

  double x(std::size_t i) const { return x_min + static_cast<double>(i) * h_x; }
  // Frequency node m in 0..n_omega-1.
  double omega(std::size_t m) const;
  // Trapezoid weight (including h_omega) of frequency node m.
  double omega_weight(std::size_t m) const;
  // Signed frequency index of node m: omega(m) = index * h_omega.
  long omega_index(std::size_t m) const;
  bool inside(std::size_t i) const { return i >= first_inside && i < first_inside + count_inside; }
  double length() const { return x_max - x_min; }

  friend bool operator==(const Grid&, const Grid&) = default;
};

}  // namespace ddcap
