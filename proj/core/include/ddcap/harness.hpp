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
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ddcap/fit.hpp"
#include "ddcap/grid.hpp"
#include "ddcap/symbols.hpp"
#include "ddcap/waterfill.hpp"

namespace ddcap {

inline constexpr double kNotComputed = std::numeric_limits<double>::quiet_NaN();

// Smoothing width used for the rate function in trace-form experiments.
struct EpsSchedule {
  enum class Mode { none, fixed, power };
  Mode mode = Mode::power;
  double eps = 0.1;
  double delta = 0.125;

  // 0 when smoothing is off, eps for fixed, alpha^(-delta) for power.
  double at(double alpha) const;
};

struct HarnessConfig {
  GridConfig grid;
  QuadratureConfig quad;
  EpsSchedule eps;
  std::vector<double> s_values{0.25, 0.5, 1.0};
  // Boundary Hilbert-Schmidt sums extend the domain by
  // max(grid.padding_m, hs_padding_factor * alpha) on each side.
  double hs_padding_factor = 1.0;
  // Envelope tail mass allowed beyond the padding before a warning is issued.
  double padding_tail_limit = 1e-8;
  // Kernel envelope for the bound and tail checks; registered families fall
  // back to default_envelope(), other symbols skip those checks.
  std::optional<KernelEnvelope> envelope;
};

// One row of a sweep. Quantities an experiment does not compute stay NaN.
struct AlphaRecord {
  double alpha = 0;
  double capacity_discrete = kNotComputed;
  double capacity_symbol = kNotComputed;
  double capacity_error = kNotComputed;  // |capacity_discrete - capacity_symbol|
  double water_level_discrete = kNotComputed;
  double water_level_symbol = kNotComputed;
  // (1/alpha) tr_alpha(f(PLP) - L_f(sigma)) and its two parts
  // (1/alpha) tr_alpha(f(PLP) - f(L)) and (1/alpha) tr_alpha(f(L) - L_f(sigma)).
  double error_total = kNotComputed;
  double error_stability = kNotComputed;
  double error_calculus = kNotComputed;
  double hs_cross_norm = kNotComputed;  // ||P L (1-P)||_I2^2
  double hs_row_norm = kNotComputed;    // ||P L||_I2^2
  double hs_row_bound = kNotComputed;   // alpha * ||psi||_1
  std::map<double, double> q_alpha;     // s -> ||(L_sigma L_e(s sigma) - L_sigma e(s sigma)) P||_I1
  double tp_i1 = kNotComputed;
  double tp_i2 = kNotComputed;
  double tpp_i1 = kNotComputed;  // T' = L_sigma L*_conj(tau) - L_sigma tau
  double tpp_i2 = kNotComputed;
  double stability_ratio = kNotComputed;  // |error_stability| / (||f''|| log(alpha)/alpha)
  double f2_norm = kNotComputed;
  double eps = kNotComputed;
  double hermitian_defect = kNotComputed;
  double min_eigenvalue = kNotComputed;
  std::size_t n_x = 0;
  std::string status = "ok";
};

struct NamedFit {
  std::string quantity;
  std::string model;  // "loglog", "semilog" or "linear"
  bool dropped_first = false;
  LineFit fit;
};

struct SweepReport {
  std::string experiment;
  std::string symbol_family;
  std::map<std::string, double> symbol_params;
  double power_S = kNotComputed;
  std::vector<AlphaRecord> records;
  std::vector<NamedFit> fits;
  std::vector<std::string> warnings;
};

// Capacity convergence: discrete water-filling on P hermitize(L) P against
// the symbol formula, plus the trace-form error and its split, evaluated
// with f(x) = r(B x) (or its smoothing) at the continuous water level B.
SweepReport run_convergence_sweep(const SymbolSpec& spec, double S, const std::vector<double>& alphas,
                                  const HarnessConfig& cfg = {});

// Only the two capacities per alpha (no trace forms).
SweepReport run_capacity(const SymbolSpec& spec, double S, const std::vector<double>& alphas,
                         const HarnessConfig& cfg = {});

// (1/alpha) |tr_alpha(f(PLP) - f(L))| and its ratio to ||f''|| log(alpha)/alpha.
SweepReport run_stability_check(const SymbolSpec& spec, const RealFunction& f, const std::vector<double>& alphas,
                                const HarnessConfig& cfg = {});

// ||P L||_I2^2 against alpha ||psi||_1 and the growth of ||P L (1-P)||_I2^2.
SweepReport run_hs_boundary_check(const SymbolSpec& spec, const std::vector<double>& alphas,
                                  const HarnessConfig& cfg = {});

// Q_alpha(s) for every s in s_values.
SweepReport run_symbol_calculus_check(const SymbolSpec& spec, const std::vector<double>& s_values,
                                      const std::vector<double>& alphas, const HarnessConfig& cfg = {});

// Trace and Hilbert-Schmidt norms of T P and T' P with tau = e(s sigma).
SweepReport run_trace_norm_scaling(const SymbolSpec& spec, double s, const std::vector<double>& alphas,
                                   const HarnessConfig& cfg = {});

// Column name for Q_alpha(s): 0.25 -> "q_alpha_s0.25", 1 -> "q_alpha_s1.0".
std::string q_alpha_label(double s);

// h_x * sum_{x_i in [0, alpha)} sum_m w_m f(sigma(x_i, omega_m)): the
// restricted trace of the quantized f(sigma), without assembling it.
double restricted_symbol_trace(const SymbolSpec& spec, const std::function<double(double)>& f, const Grid& grid);

// ||P A (1-P)||_I2^2.
double boundary_hs_norm(const Eigen::MatrixXcd& a, const Grid& grid);

enum class DifferenceKernel {
  plain,             // t(x,y)  = int e^{-i2pi w (x-y)} (tau(y,w) - tau(x,w)) dw
  weighted_by_sigma  // t'(x,y) = int e^{-i2pi w (x-y)} sigma(x,w) (tau(y,w) - tau(x,w)) dw
};

// h_x-weighted matrix of T = L*_conj(tau) - L_tau (or T') assembled by direct
// omega quadrature of the kernel formulas. Requires a 1-periodic or
// time-invariant symbol with 1/h_x an integer.
Eigen::MatrixXcd symbol_difference_operator(const SymbolSpec& spec, double s, const Grid& grid,
                                            DifferenceKernel kind = DifferenceKernel::plain);

}  // namespace ddcap
