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

#include "ddcap/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ddcap/errors.hpp"
#include "fourier.hpp"

namespace ddcap {

namespace {

using std::numbers::pi;
using cd = std::complex<double>;

struct ParamRule {
  const char* name;
  double fallback;
  double lo;
  double hi;
  bool lo_open;  // lo excluded
};

std::map<std::string, double> resolve(const std::string& family, const std::map<std::string, double>& given,
                                      std::initializer_list<ParamRule> rules) {
  std::map<std::string, double> out;
  for (const auto& [k, v] : given) {
    const bool known = std::any_of(rules.begin(), rules.end(), [&](const ParamRule& r) { return k == r.name; });
    if (!known) throw ConfigError("unknown parameter '" + k + "' for family " + family, "symbol.params." + k);
    if (!std::isfinite(v)) throw DomainError(family + ": parameter " + k + " must be finite");
  }
  for (const auto& r : rules) {
    const auto it = given.find(r.name);
    const double v = it == given.end() ? r.fallback : it->second;
    const bool below = r.lo_open ? !(v > r.lo) : !(v >= r.lo);
    if (below || v > r.hi) {
      throw DomainError(family + ": parameter " + r.name + " = " + std::to_string(v) + " out of range");
    }
    out[r.name] = v;
  }
  return out;
}

constexpr double kInf = std::numeric_limits<double>::infinity();

// Integral of f over [a, inf) by adaptive Gauss-Kronrod.
template <class F>
double integrate_to_inf(F f, double a) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, kInf, 20, 1e-12);
}

KernelEnvelope band_envelope(double c, double W) {
  // |k| <= 2Wc * min(1, 1/(2 pi W z)); the factor 4 on |k|^2 absorbs the
  // periodization of the quadrature kernel.
  const double amp = 2.0 * W * c;
  const double z0 = 1.0 / (2.0 * pi * W);
  KernelEnvelope env;
  env.psi = [amp, z0](double z) {
    const double a = std::abs(z);
    const double r = a <= z0 ? 1.0 : (z0 / a) * (z0 / a);
    return 4.0 * amp * amp * r;
  };
  env.tail_constant = 8.0 * c * c / (pi * pi);
  return env;
}

}  // namespace

std::vector<std::string> registered_families() {
  return {"band_constant", "cosine_gauss", "square_smooth", "two_tone"};
}

SymbolSpec make_symbol(const std::string& family, const std::map<std::string, double>& params) {
  SymbolSpec s;
  s.family = family;
  if (family == "band_constant") {
    s.params = resolve(family, params, {{"c", 1.0, 0.0, kInf, true}, {"W", 0.25, 0.0, kInf, true}});
    const double c = s.params["c"];
    const double W = s.params["W"];
    s.time_invariant = true;
    s.omega_decay = OmegaDecay::compact;
    s.smoothness_order = 0;
    // Half value on the band edge, the Fourier-inversion convention at a jump.
    s.evaluator = [c, W](double, double omega) {
      const double a = std::abs(omega);
      if (std::abs(a - W) <= 1e-12 * W) return 0.5 * c;
      return a < W ? c : 0.0;
    };
  } else if (family == "cosine_gauss") {
    s.params = resolve(family, params, {{"w", 1.0, 0.0, kInf, true}});
    const double w = s.params["w"];
    s.period_x = 1.0;
    s.omega_decay = OmegaDecay::gaussian;
    s.smoothness_order = kInfiniteSmoothness;
    s.evaluator = [w](double x, double omega) {
      return 0.5 * (1.0 + std::cos(2.0 * pi * x)) * std::exp(-omega * omega / (2.0 * w * w));
    };
  } else if (family == "square_smooth") {
    s.params = resolve(family, params,
                       {{"lo", 0.2, 0.0, kInf, false},
                        {"hi", 1.0, 0.0, kInf, true},
                        {"kappa", 4.0, 0.0, kInf, true},
                        {"W", 0.5, 0.0, kInf, true},
                        {"beta", 0.5, 0.0, 1.0, true}});
    const double lo = s.params["lo"];
    const double hi = s.params["hi"];
    if (!(hi > lo)) throw DomainError("square_smooth: hi must exceed lo");
    const double kappa = s.params["kappa"];
    const double W = s.params["W"];
    const double beta = s.params["beta"];
    s.period_x = 1.0;
    s.omega_decay = OmegaDecay::compact;
    s.smoothness_order = 1;
    s.evaluator = [=](double x, double omega) {
      const double sq = 0.5 * (1.0 + std::tanh(kappa * std::sin(2.0 * pi * x)) / std::tanh(kappa));
      const double amp = lo + (hi - lo) * sq;
      const double a = std::abs(omega);
      const double inner = W * (1.0 - beta);
      const double outer = W * (1.0 + beta);
      if (a <= inner) return amp;
      if (a >= outer) return 0.0;
      const double c = std::cos(pi * (a - inner) / (4.0 * beta * W));
      return amp * c * c;
    };
  } else if (family == "two_tone") {
    s.params = resolve(family, params,
                       {{"a0", 0.6, 0.0, kInf, true}, {"a1", 0.4, -kInf, kInf, false}, {"w", 0.5, 0.0, kInf, true}});
    const double a0 = s.params["a0"];
    const double a1 = s.params["a1"];
    const double w = s.params["w"];
    if (std::abs(a1) > a0) throw DomainError("two_tone: |a1| must not exceed a0");
    s.period_x = 1.0;
    s.omega_decay = OmegaDecay::algebraic;
    s.decay_order = 4;
    s.smoothness_order = kInfiniteSmoothness;
    s.evaluator = [=](double x, double omega) {
      const double r = omega / w;
      const double l = 1.0 / (1.0 + r * r);
      return (a0 + a1 * std::cos(2.0 * pi * x)) * l * l;
    };
  } else {
    throw ConfigError("unknown symbol family '" + family + "'", "symbol.family");
  }
  return s;
}

double eval_symbol(const SymbolSpec& spec, double x, double omega) {
  if (!spec.evaluator) throw ConfigError("symbol family '" + spec.family + "' is not registered", "symbol.family");
  return spec.evaluator(x, omega);
}

Eigen::MatrixXd sample_symbol(const SymbolSpec& spec, const Grid& grid) {
  Eigen::MatrixXd out(grid.n_x, grid.n_omega);
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    for (std::size_t m = 0; m < grid.n_omega; ++m) out(i, m) = eval_symbol(spec, grid.x(i), grid.omega(m));
  }
  return out;
}

KernelEnvelope default_envelope(const SymbolSpec& spec) {
  const auto& p = spec.params;
  if (spec.family == "band_constant") return band_envelope(p.at("c"), p.at("W"));
  if (spec.family == "square_smooth") return band_envelope(p.at("hi"), p.at("W"));
  if (spec.family == "cosine_gauss") {
    const double w = p.at("w");
    KernelEnvelope env;
    env.psi = [w](double z) { return 1.01 * 2.0 * pi * w * w * std::exp(-4.0 * pi * pi * w * w * z * z); };
    env.tail_constant = 1.01 / (2.0 * pi);
    return env;
  }
  if (spec.family == "two_tone") {
    const double amp = p.at("a0") + std::abs(p.at("a1"));
    const double w = p.at("w");
    const double b = 2.0 * pi * w;
    const double scale = 1.01 * amp * amp * (pi * w / 2.0) * (pi * w / 2.0);
    KernelEnvelope env;
    env.psi = [scale, b](double z) {
      const double a = std::abs(z);
      return scale * (1.0 + b * a) * (1.0 + b * a) * std::exp(-2.0 * b * a);
    };
    // sup_s s * tail(s), sampled on a log grid with a small safety factor.
    double c = 0;
    for (double s = 1e-3; s < 1e3; s *= 1.1) c = std::max(c, s * envelope_tail(env, s));
    env.tail_constant = 1.05 * c;
    return env;
  }
  throw ConfigError("no envelope for family '" + spec.family + "'", "symbol.family");
}

double envelope_tail(const KernelEnvelope& env, double s) {
  const auto f = [&](double z) { return env.psi(z) + env.psi(-z); };
  return integrate_to_inf(f, std::max(s, 0.0));
}

double envelope_l1(const KernelEnvelope& env) { return envelope_tail(env, 0.0); }

double envelope_sqrt_l1(const KernelEnvelope& env, double z_max) {
  const auto f = [&](double z) { return std::sqrt(env.psi(z)) + std::sqrt(env.psi(-z)); };
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, z_max, 20, 1e-12);
}

std::complex<double> KernelTable::at(std::size_t i, std::size_t j) const {
  const long n = static_cast<long>(grid.dft_length);
  long d = (static_cast<long>(i) - static_cast<long>(j)) % n;
  if (d < 0) d += n;
  return offsets(static_cast<Eigen::Index>(i), d);
}

Eigen::MatrixXcd KernelTable::matrix() const {
  Eigen::MatrixXcd k(grid.n_x, grid.n_x);
  for (std::size_t j = 0; j < grid.n_x; ++j) {
    for (std::size_t i = 0; i < grid.n_x; ++i) k(i, j) = at(i, j);
  }
  return k;
}

KernelTable symbol_to_kernel(const SymbolSpec& spec, const Grid& grid, double tail_tol) {
  KernelTable t;
  t.grid = grid;
  t.offsets.resize(grid.n_x, grid.dft_length);
  detail::RowTransform tr(grid);
  std::vector<cd> samples(grid.n_omega);
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    const double x = grid.x(i);
    for (std::size_t m = 0; m < grid.n_omega; ++m) samples[m] = eval_symbol(spec, x, grid.omega(m));
    t.edge_magnitude = std::max({t.edge_magnitude, std::abs(samples.front()), std::abs(samples.back())});
    const auto row = tr.kernel_from_samples(samples);
    for (std::size_t d = 0; d < row.size(); ++d) t.offsets(i, d) = row[d];
  }
  t.truncation_warning = t.edge_magnitude > tail_tol;
  return t;
}

namespace {

SymbolSamples recover(const Grid& grid, const std::function<void(std::size_t, std::vector<cd>&)>& fill_row,
                      std::size_t& truncated_rows) {
  SymbolSamples out;
  out.values.resize(grid.n_x, grid.n_omega);
  detail::RowTransform tr(grid);
  std::vector<cd> row(grid.dft_length);
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    std::fill(row.begin(), row.end(), cd{});
    fill_row(i, row);
    const auto sym = tr.symbol_from_offsets(row);
    for (std::size_t m = 0; m < grid.n_omega; ++m) {
      const cd v = sym[tr.bin_of(m)];
      out.values(i, m) = v.real();
      out.imag_residue = std::max(out.imag_residue, std::abs(v.imag()));
    }
  }
  out.truncated_rows = truncated_rows;
  out.tail_warning = truncated_rows > 0;
  return out;
}

}  // namespace

SymbolSamples kernel_to_symbol(const KernelTable& table, double tail_tol) {
  const Grid& g = table.grid;
  const std::size_t n = g.dft_length;
  // A row is truncated when the kernel has not decayed at the half-period offset.
  std::size_t truncated = 0;
  for (std::size_t i = 0; i < g.n_x; ++i) {
    const double peak = table.offsets.row(i).cwiseAbs().maxCoeff();
    if (peak > 0 && std::abs(table.offsets(i, n / 2)) > tail_tol * std::max(1.0, peak)) ++truncated;
  }
  return recover(
      g,
      [&](std::size_t i, std::vector<cd>& row) {
        for (std::size_t d = 0; d < n; ++d) row[d] = table.offsets(i, d);
      },
      truncated);
}

SymbolSamples kernel_to_symbol(const Eigen::MatrixXcd& kernel, const Grid& grid, double tail_tol) {
  if (static_cast<std::size_t>(kernel.rows()) != grid.n_x || static_cast<std::size_t>(kernel.cols()) != grid.n_x) {
    throw PreconditionError("kernel_to_symbol: kernel dimensions do not match the grid");
  }
  const long n = static_cast<long>(grid.dft_length);
  const auto last = static_cast<Eigen::Index>(grid.n_x - 1);
  std::size_t truncated = 0;
  for (Eigen::Index i = 0; i < kernel.rows(); ++i) {
    const double peak = kernel.row(i).cwiseAbs().maxCoeff();
    const double edge = std::max(std::abs(kernel(i, 0)), std::abs(kernel(i, last)));
    if (peak > 0 && edge > tail_tol * std::max(1.0, peak)) ++truncated;
  }
  return recover(
      grid,
      [&](std::size_t i, std::vector<cd>& row) {
        for (std::size_t j = 0; j < grid.n_x; ++j) {
          long d = (static_cast<long>(i) - static_cast<long>(j)) % n;
          if (d < 0) d += n;
          row[static_cast<std::size_t>(d)] = kernel(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
      },
      truncated);
}

EnvelopeReport envelope_check(const SymbolSpec& spec, const KernelEnvelope& env, const Grid& grid,
                              const std::vector<double>& tail_points, std::size_t max_violations) {
  const KernelTable table = symbol_to_kernel(spec, grid);
  const long n = static_cast<long>(grid.n_x);
  const long len = static_cast<long>(grid.dft_length);
  // Values below the transform's rounding floor, or below the mass cut off
  // at +-omega_max for algebraically decaying symbols, carry no information.
  double floor = 1e-12 * table.offsets.cwiseAbs().maxCoeff();
  if (spec.omega_decay == OmegaDecay::algebraic) {
    const double p = std::max(spec.decay_order - 1, 1);
    floor = std::max(floor, 2.0 * table.edge_magnitude * grid.omega_max / p);
  }

  EnvelopeReport rep;
  rep.worst_margin = std::numeric_limits<double>::infinity();
  std::vector<double> psi(static_cast<std::size_t>(2 * n - 1));
  for (long d = -(n - 1); d < n; ++d) psi[static_cast<std::size_t>(d + n - 1)] = env.psi(static_cast<double>(d) * grid.h_x);

  for (long i = 0; i < n; ++i) {
    for (long d = -(n - 1); d < n; ++d) {
      const double k = std::abs(table.offsets(i, ((d % len) + len) % len));
      if (k <= floor) continue;
      const double k2 = k * k;
      const double p = psi[static_cast<std::size_t>(d + n - 1)];
      if (p / k2 < rep.worst_margin) {
        rep.worst_margin = p / k2;
        rep.worst = {grid.x(static_cast<std::size_t>(i)), static_cast<double>(d) * grid.h_x, k2, p};
      }
      if (k2 > p) {
        ++rep.violation_count;
        if (rep.violations.size() < max_violations) {
          rep.violations.push_back({grid.x(static_cast<std::size_t>(i)), static_cast<double>(d) * grid.h_x, k2, p});
        }
      }
    }
  }
  rep.pass = rep.violation_count == 0;
  for (double s : tail_points) {
    TailSample ts;
    ts.s = s;
    ts.tail = envelope_tail(env, s);
    ts.bound = env.tail_constant / s;
    ts.ok = ts.tail <= ts.bound * (1.0 + 1e-9);
    rep.pass = rep.pass && ts.ok;
    rep.tail_samples.push_back(ts);
  }
  return rep;
}

}  // namespace ddcap
