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

#include "ddcap/waterfill.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ddcap/errors.hpp"

namespace ddcap {

double rate_r(double x) { return x >= 1.0 ? std::log(x) : 0.0; }

double rate_p(double x) { return x >= 1.0 ? (x - 1.0) / x : 0.0; }

RealFunction rate_r_function() { return {"r", rate_r, nullptr}; }

RealFunction square_function() {
  return {"square", [](double x) { return x * x; }, [](double) { return 2.0; }};
}

RealFunction linear_function(double slope, double offset) {
  return {"linear", [slope, offset](double x) { return slope * x + offset; }, [](double) { return 0.0; }};
}

RealFunction scaled(const RealFunction& f, double scale) {
  RealFunction out;
  out.name = f.name + "(" + std::to_string(scale) + "x)";
  out.value = [v = f.value, scale](double x) { return v(scale * x); };
  if (f.second_derivative) {
    out.second_derivative = [d = f.second_derivative, scale](double x) { return scale * scale * d(scale * x); };
  }
  return out;
}

namespace {

struct Jet {
  double v = 0;
  double d1 = 0;
  double d2 = 0;
};

Jet eval_h(RateShape h, const std::vector<double>& coeffs, double x) {
  switch (h) {
    case RateShape::log: return {std::log(x), 1.0 / x, -1.0 / (x * x)};
    case RateShape::ratio: return {(x - 1.0) / x, 1.0 / (x * x), -2.0 / (x * x * x)};
    case RateShape::polynomial: {
      Jet j;
      for (std::size_t k = coeffs.size(); k-- > 0;) {
        j.d2 = j.d2 * x + 2.0 * j.d1;
        j.d1 = j.d1 * x + j.v;
        j.v = j.v * x + coeffs[k];
      }
      return j;
    }
  }
  return {};
}

Jet f_eps_jet(RateShape h, double eps, const FEpsOptions& o, double x) {
  const double t = (x - 1.0) / eps;
  if (t <= 0.0) return {};
  const double top = o.support_hi + o.extension_width;
  if (x >= top) return {};
  const Jet hv = eval_h(h, o.poly_coeffs, x);
  const double s0 = smooth_step(t);
  const double s1 = smooth_step_d1(t) / eps;
  const double s2 = smooth_step_d2(t) / (eps * eps);
  Jet g{hv.v * s0, hv.d1 * s0 + hv.v * s1, hv.d2 * s0 + 2.0 * hv.d1 * s1 + hv.v * s2};
  if (x <= o.support_hi) return g;
  const double u = (x - o.support_hi) / o.extension_width;
  const double c0 = 1.0 - smooth_step(u);
  const double c1 = -smooth_step_d1(u) / o.extension_width;
  const double c2 = -smooth_step_d2(u) / (o.extension_width * o.extension_width);
  return {g.v * c0, g.d1 * c0 + g.v * c1, g.d2 * c0 + 2.0 * g.d1 * c1 + g.v * c2};
}

}  // namespace

RealFunction build_f_eps(RateShape h, double eps, const FEpsOptions& opts) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw DomainError("build_f_eps: eps must be positive");
  if (!(opts.extension_width > 0.0)) throw DomainError("build_f_eps: extension_width must be positive");
  if (!(opts.support_hi > 1.0 + eps)) throw DomainError("build_f_eps: support must extend past 1 + eps");
  if (h == RateShape::polynomial && opts.poly_coeffs.empty()) {
    throw DomainError("build_f_eps: polynomial shape needs coefficients");
  }
  const char* base = h == RateShape::log ? "log" : h == RateShape::ratio ? "ratio" : "poly";
  RealFunction f;
  f.name = std::string("f_eps[") + base + ", eps=" + std::to_string(eps) + "]";
  f.value = [=](double x) { return f_eps_jet(h, eps, opts, x).v; };
  f.second_derivative = [=](double x) { return f_eps_jet(h, eps, opts, x).d2; };
  return f;
}

double sup_abs_second_derivative(const RealFunction& f, double lo, double hi, std::size_t samples) {
  if (!f.second_derivative) throw DomainError("function " + f.name + " has no second derivative");
  if (samples < 2) samples = 2;
  double best = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(samples - 1);
    best = std::max(best, std::abs(f.second_derivative(x)));
  }
  return best;
}

namespace {

// Weighted water-filling over (gain, weight) pairs sorted by gain
// descending: sum_active w (B - 1/g) = budget, stopping at the first K
// for which the next gain stays below the level.
WaterfillSolution fill(const std::vector<std::pair<double, double>>& modes, double budget, double normalizer) {
  WaterfillSolution sol;
  if (budget == 0.0) {
    sol.B = 1.0 / modes.front().first;
    return sol;
  }
  double wsum = 0;
  double inv_sum = 0;
  std::size_t k = 0;
  for (; k < modes.size(); ++k) {
    wsum += modes[k].second;
    inv_sum += modes[k].second / modes[k].first;
    sol.B = (budget + inv_sum) / wsum;
    if (k + 1 == modes.size() || modes[k + 1].first * sol.B <= 1.0) break;
  }
  double rate = 0;
  double power = 0;
  for (std::size_t j = 0; j <= k && j < modes.size(); ++j) {
    const double level = sol.B * modes[j].first;
    if (level > 1.0) ++sol.active_count;
    rate += modes[j].second * std::log(level);
    power += modes[j].second * (sol.B - 1.0 / modes[j].first);
  }
  sol.capacity_rate = rate / normalizer;
  sol.power_achieved = power / normalizer;
  return sol;
}

}  // namespace

WaterfillSolution waterfill_discrete(std::span<const double> eigenvalues, double S, double alpha, bool strict_negative) {
  if (!(S >= 0.0) || !std::isfinite(S)) throw DomainError("waterfill_discrete: power budget S must be >= 0");
  if (!(alpha > 0.0)) throw DomainError("waterfill_discrete: alpha must be positive");
  double scale = 0;
  for (double l : eigenvalues) scale = std::max(scale, std::abs(l));
  const double tol = 1e-10 * scale;
  std::vector<std::pair<double, double>> modes;
  modes.reserve(eigenvalues.size());
  for (double l : eigenvalues) {
    if (!std::isfinite(l)) throw NumericalError("waterfill_discrete: non-finite eigenvalue");
    if (l < -tol && strict_negative) {
      throw NumericalError("waterfill_discrete: eigenvalue " + std::to_string(l) + " below -tol_neg");
    }
    if (l > tol) modes.emplace_back(l, 1.0);
  }
  if (modes.empty()) throw NumericalError("waterfill_discrete: no positive eigenvalue, capacity is zero");
  std::sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  // Power and rate per unit time: the budget over alpha is alpha * S.
  return fill(modes, alpha * S, alpha);
}

WaterfillSolution waterfill_discrete(const Spectrum& spectrum, double S, double alpha, bool strict_negative) {
  return waterfill_discrete(std::span<const double>(spectrum.values), S, alpha, strict_negative);
}

QuadratureConfig QuadratureConfig::from_density(double density, double omega_max) {
  if (!(density > 0)) throw ConfigError("quadrature density must be positive", "grid.quad_density");
  QuadratureConfig q;
  q.x_nodes = static_cast<std::size_t>(std::llround(16.0 * density));
  q.omega_step = 1.0 / (16.0 * density);
  q.omega_max = omega_max;
  return q;
}

WaterfillSolution waterfill_symbol(const SymbolSpec& spec, double S, const QuadratureConfig& quad) {
  if (!(S >= 0.0) || !std::isfinite(S)) throw DomainError("waterfill_symbol: power budget S must be >= 0");
  if (!spec.time_invariant && !spec.period_x) {
    throw UnsupportedError("waterfill_symbol needs a periodic or time-invariant symbol", "symbol");
  }
  if (quad.x_nodes == 0 || !(quad.omega_step > 0) || !(quad.omega_max > 0)) {
    throw ConfigError("invalid quadrature configuration", "grid.quad_density");
  }
  const double period = spec.time_invariant ? 1.0 : *spec.period_x;
  const std::size_t nx = spec.time_invariant ? 1 : quad.x_nodes;
  const auto nw = static_cast<std::size_t>(std::llround(2.0 * quad.omega_max / quad.omega_step));
  const double h = 2.0 * quad.omega_max / static_cast<double>(nw);
  // Per unit time: the x average carries weight 1/nx per node.
  const double w = h / static_cast<double>(nx);

  std::vector<std::pair<double, double>> modes;
  modes.reserve(nx * nw);
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = period * static_cast<double>(i) / static_cast<double>(nx);
    for (std::size_t m = 0; m < nw; ++m) {
      const double omega = -quad.omega_max + (static_cast<double>(m) + 0.5) * h;
      const double v = eval_symbol(spec, x, omega);
      if (v > 0.0) modes.emplace_back(v, w);
    }
  }
  if (modes.empty()) throw NumericalError("waterfill_symbol: symbol is nowhere positive, capacity is zero");
  std::stable_sort(modes.begin(), modes.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  return fill(modes, S, 1.0);
}

}  // namespace ddcap
