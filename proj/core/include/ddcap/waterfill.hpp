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
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ddcap/spectral.hpp"
#include "ddcap/symbols.hpp"

namespace ddcap {

// r(x) = log(x) on [1, inf), 0 below.
double rate_r(double x);
// p(x) = (x - 1)/x on [1, inf), 0 below.
double rate_p(double x);

// C-infinity step: 0 for t <= 0, 1 for t >= 1, normalized integral of
// exp(-1/(t(1-t))) in between.
double smooth_step(double t);
double smooth_step_d1(double t);
double smooth_step_d2(double t);

// A real function together with its second derivative (may be null when
// the function has a kink, as r and p do).
struct RealFunction {
  std::string name;
  std::function<double(double)> value;
  std::function<double(double)> second_derivative;

  double operator()(double x) const { return value(x); }
};

RealFunction rate_r_function();
RealFunction square_function();
RealFunction linear_function(double slope, double offset = 0.0);
// x -> f(scale * x).
RealFunction scaled(const RealFunction& f, double scale);

enum class RateShape { log, ratio, polynomial };

struct FEpsOptions {
  // Upper end of the spectral interval I; above it f_eps is rolled off to
  // zero over extension_width so that the result has compact support.
  double support_hi = 16.0;
  double extension_width = 1.0;
  std::vector<double> poly_coeffs;  // h(x) = sum c_k x^k for RateShape::polynomial
};

// f_eps(x) = h(x) * smooth_step((x - 1)/eps), smoothly cut off above support_hi.
// Throws DomainError for eps <= 0.
RealFunction build_f_eps(RateShape h, double eps, const FEpsOptions& opts = {});

// max |f''| over [lo, hi] by dense sampling.
double sup_abs_second_derivative(const RealFunction& f, double lo, double hi, std::size_t samples = 20001);

struct WaterfillSolution {
  double B = 0;              // water level
  double capacity_rate = 0;  // nats per unit time
  double power_achieved = 0;
  std::size_t active_count = 0;  // modes with B * lambda > 1
};

// Discrete water-filling over the eigenvalues of P L P:
//   (B/alpha) sum p(B lambda_k) = S,   rate = (1/alpha) sum r(B lambda_k).
// Eigenvalues in [-tol_neg, 0) are treated as zero. More negative ones throw
// NumericalError when strict_negative is set; otherwise they stay inactive.
WaterfillSolution waterfill_discrete(std::span<const double> eigenvalues, double S, double alpha,
                                     bool strict_negative = true);
WaterfillSolution waterfill_discrete(const Spectrum& spectrum, double S, double alpha, bool strict_negative = true);

struct QuadratureConfig {
  std::size_t x_nodes = 64;  // per period
  double omega_step = 1.0 / 64.0;
  double omega_max = 8.0;

  static QuadratureConfig from_density(double density, double omega_max = 8.0);
};

// Water-filling on the symbol: B solves B * integral p(B sigma) = S over one
// period in x and [-omega_max, omega_max] in omega; rate = integral r(B sigma).
// Periodic integrand in x uses equispaced nodes, omega uses midpoint nodes.
WaterfillSolution waterfill_symbol(const SymbolSpec& spec, double S, const QuadratureConfig& quad = {});

}  // namespace ddcap
