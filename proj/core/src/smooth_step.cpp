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

#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "ddcap/waterfill.hpp"

namespace ddcap {

namespace {

double bump(double u) {
  if (u <= 0.0 || u >= 1.0) return 0.0;
  return std::exp(-1.0 / (u * (1.0 - u)));
}

// Integral of the bump over [0, t], t in [0, 1/2], on four Gauss panels.
double bump_integral(double t) {
  using boost::math::quadrature::gauss;
  double sum = 0;
  constexpr int kPanels = 4;
  for (int k = 0; k < kPanels; ++k) {
    const double a = t * k / kPanels;
    const double b = t * (k + 1) / kPanels;
    sum += gauss<double, 30>::integrate(bump, a, b);
  }
  return sum;
}

double bump_total() {
  static const double total = 2.0 * bump_integral(0.5);
  return total;
}

}  // namespace

double smooth_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  // bump is symmetric about 1/2
  if (t <= 0.5) return bump_integral(t) / bump_total();
  return 1.0 - bump_integral(1.0 - t) / bump_total();
}

double smooth_step_d1(double t) { return bump(t) / bump_total(); }

double smooth_step_d2(double t) {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  const double q = t * (1.0 - t);
  return bump(t) * (1.0 - 2.0 * t) / (q * q) / bump_total();
}

}  // namespace ddcap
