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

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "ddcap/grid.hpp"

namespace ddcap {

enum class OmegaDecay { compact, gaussian, algebraic };

// Marker for C-infinity families in SymbolSpec::smoothness_order.
inline constexpr int kInfiniteSmoothness = 1000;

// A named, parametric time-varying transfer function sigma(x, omega).
//
// Instances are created through make_symbol(), which validates the
// parameters, fills in defaults and binds the evaluator. The evaluator is
// a pure function; SymbolSpec values are cheap to copy and safe to share.
struct SymbolSpec {
  std::string family;
  std::map<std::string, double> params;
  std::optional<double> period_x;  // nullopt for time-invariant symbols
  bool time_invariant = false;
  OmegaDecay omega_decay = OmegaDecay::compact;
  int decay_order = 0;  // polynomial order for algebraic decay
  int smoothness_order = 0;
  std::function<double(double, double)> evaluator;
};

std::vector<std::string> registered_families();

// Builds a registered family. Missing parameters take their defaults.
// Throws ConfigError for unknown families or parameter names and
// DomainError for parameters outside the documented ranges.
SymbolSpec make_symbol(const std::string& family, const std::map<std::string, double>& params = {});

double eval_symbol(const SymbolSpec& spec, double x, double omega);

// sigma(x_i, omega_m) on the grid, n_x rows by n_omega columns.
Eigen::MatrixXd sample_symbol(const SymbolSpec& spec, const Grid& grid);

// Upper bound psi(z) for |k(x, x - z)|^2 and the constant c of the tail
// bound  integral_{|z| > s} psi <= c / s.
struct KernelEnvelope {
  std::function<double(double)> psi;
  double tail_constant = 0;
};

// Closed-form envelope for every registered family.
KernelEnvelope default_envelope(const SymbolSpec& spec);

// integral_{|z| > s} psi(z) dz.
double envelope_tail(const KernelEnvelope& env, double s);
// ||psi||_1 over the real line.
double envelope_l1(const KernelEnvelope& env);
// ||sqrt(psi)||_1 restricted to |z| <= z_max (the band-limited envelopes
// decay like 1/|z| and are only integrable on a truncated domain).
double envelope_sqrt_l1(const KernelEnvelope& env, double z_max);

inline constexpr double kDefaultTailTol = 1e-10;

// Kernel of the quantized symbol on the grid, stored by offset:
// offsets(i, d) = k(x_i, x_i - d*h_x) with d taken modulo dft_length.
// Negative offsets live at dft_length - |d|.
struct KernelTable {
  Grid grid;
  Eigen::MatrixXcd offsets;
  double edge_magnitude = 0;  // max_x |sigma(x, +-omega_max)|
  bool truncation_warning = false;

  std::complex<double> at(std::size_t i, std::size_t j) const;
  // Dense n_x by n_x matrix k(x_i, x_j) (no quadrature weight).
  Eigen::MatrixXcd matrix() const;
};

// k(x, x - z) = integral exp(-i 2 pi omega z) sigma(x, omega) d omega by
// trapezoid quadrature on the grid's frequency axis.
KernelTable symbol_to_kernel(const SymbolSpec& spec, const Grid& grid, double tail_tol = kDefaultTailTol);

struct SymbolSamples {
  Eigen::MatrixXd values;  // n_x by n_omega
  double imag_residue = 0;  // max |Im sigma| recovered
  std::size_t truncated_rows = 0;  // rows whose kernel does not decay inside the window
  bool tail_warning = false;
};

// sigma(x, omega) = integral exp(+i 2 pi omega z) k(x, x - z) dz.
SymbolSamples kernel_to_symbol(const KernelTable& table, double tail_tol = kDefaultTailTol);
// Same transform from a dense kernel matrix k(x_i, x_j). Offsets not covered
// by a row of the matrix are taken as zero.
SymbolSamples kernel_to_symbol(const Eigen::MatrixXcd& kernel, const Grid& grid,
                               double tail_tol = kDefaultTailTol);

struct EnvelopeViolation {
  double x = 0;
  double z = 0;
  double kernel_sq = 0;
  double psi = 0;
};

struct TailSample {
  double s = 0;
  double tail = 0;
  double bound = 0;
  bool ok = false;
};

struct EnvelopeReport {
  bool pass = true;
  // min over (x, z) of psi(z) / |k(x, x - z)|^2; +inf for a zero kernel.
  double worst_margin = 0;
  EnvelopeViolation worst;  // pair attaining worst_margin
  std::vector<EnvelopeViolation> violations;  // capped at max_violations
  std::size_t violation_count = 0;
  std::vector<TailSample> tail_samples;
};

EnvelopeReport envelope_check(const SymbolSpec& spec, const KernelEnvelope& env, const Grid& grid,
                              const std::vector<double>& tail_points = {1.0, 2.0, 4.0, 8.0},
                              std::size_t max_violations = 32);

}  // namespace ddcap
