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

#include "ddcap/harness.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <span>
#include <string>
#include <vector>

#include "ddcap/errors.hpp"
#include "ddcap/quantize.hpp"
#include "ddcap/spectral.hpp"
#include "fourier.hpp"

namespace ddcap {

double EpsSchedule::at(double alpha) const {
  switch (mode) {
    case Mode::none: return 0.0;
    case Mode::fixed: return eps;
    case Mode::power: return std::pow(alpha, -delta);
  }
  return 0.0;
}

namespace {

using cd = std::complex<double>;

void check_alphas(const std::vector<double>& alphas) {
  for (double a : alphas) {
    if (!(a > 0.0) || !std::isfinite(a)) throw ConfigError("every alpha must be positive", "alphas");
  }
}

void warn(SweepReport& r, const std::string& msg) {
  if (std::find(r.warnings.begin(), r.warnings.end(), msg) == r.warnings.end()) r.warnings.push_back(msg);
}

SweepReport start_report(const std::string& experiment, const SymbolSpec& spec) {
  SweepReport r;
  r.experiment = experiment;
  r.symbol_family = spec.family;
  r.symbol_params = spec.params;
  return r;
}

// Runs body for one alpha; library errors are stored in the record and the
// sweep goes on with the next alpha.
template <class Body>
void run_cell(SweepReport& report, double alpha, Body&& body) {
  AlphaRecord rec;
  rec.alpha = alpha;
  try {
    body(rec);
  } catch (const Error& e) {
    rec.status = e.what();
  }
  report.records.push_back(std::move(rec));
}

template <class Get>
void add_fit(SweepReport& r, const std::string& quantity, const std::string& model, Get get) {
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& rec : r.records) {
    const double v = get(rec);
    if (rec.status != "ok" || !std::isfinite(v)) continue;
    if (model == "loglog" && !(v > 0.0)) continue;
    x.push_back(rec.alpha);
    y.push_back(v);
  }
  for (bool drop : {false, true}) {
    const std::size_t skip = drop ? 1 : 0;
    if (x.size() < skip + 3) continue;
    const std::span<const double> xs(x.data() + skip, x.size() - skip);
    const std::span<const double> ys(y.data() + skip, y.size() - skip);
    NamedFit nf{quantity, model, drop, {}};
    if (model == "loglog") {
      nf.fit = fit_loglog(xs, ys);
    } else if (model == "semilog") {
      nf.fit = fit_semilog(xs, ys);
    } else {
      nf.fit = fit_line(xs, ys);
    }
    r.fits.push_back(nf);
  }
}

double sigma_sup(const SymbolSpec& spec, const QuadratureConfig& quad) {
  const double period = spec.period_x.value_or(1.0);
  const std::size_t nx = spec.time_invariant ? 1 : quad.x_nodes;
  const auto nw = static_cast<std::size_t>(std::llround(2.0 * quad.omega_max / quad.omega_step));
  double best = 0;
  for (std::size_t i = 0; i < nx; ++i) {
    const double x = period * static_cast<double>(i) / static_cast<double>(nx);
    for (std::size_t m = 0; m <= nw; ++m) {
      const double omega = -quad.omega_max + static_cast<double>(m) * quad.omega_step;
      best = std::max(best, std::abs(eval_symbol(spec, x, omega)));
    }
  }
  return best;
}

double sum_of(const std::vector<double>& values, const std::function<double(double)>& f) {
  double s = 0;
  for (double v : values) s += f(v);
  return s;
}

// Number of grid steps after which x_i repeats modulo the period, or 0 when
// the symbol has no usable period on this grid.
std::size_t residue_count(const SymbolSpec& spec, double h_x) {
  if (spec.time_invariant) return 1;
  if (!spec.period_x) return 0;
  const double q = *spec.period_x / h_x;
  const double qr = std::round(q);
  if (qr < 1.0 || std::abs(q - qr) > 1e-9 * q) return 0;
  return static_cast<std::size_t>(qr);
}

std::string tail_warning(double limit) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "kernel envelope tail beyond the padding exceeds %g", limit);
  return buf;
}

std::optional<KernelEnvelope> envelope_for(const SymbolSpec& spec, const HarnessConfig& cfg) {
  if (cfg.envelope) return cfg.envelope;
  const auto names = registered_families();
  if (std::find(names.begin(), names.end(), spec.family) == names.end()) return std::nullopt;
  return default_envelope(spec);
}

double padding_for(double alpha, const HarnessConfig& cfg) {
  const double h = cfg.grid.h_x;
  const double p = std::max(cfg.grid.padding_m, cfg.hs_padding_factor * alpha);
  return std::ceil(p / h - 1e-9) * h;
}

}  // namespace

std::string q_alpha_label(double s) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, s);
  std::string out(buf, res.ptr);
  if (out.find_first_of(".e") == std::string::npos) out += ".0";
  return "q_alpha_s" + out;
}

double restricted_symbol_trace(const SymbolSpec& spec, const std::function<double(double)>& f, const Grid& grid) {
  double total = 0;
  for (std::size_t i = grid.first_inside; i < grid.first_inside + grid.count_inside; ++i) {
    const double x = grid.x(i);
    double row = 0;
    for (std::size_t m = 0; m < grid.n_omega; ++m) {
      row += grid.omega_weight(m) * f(eval_symbol(spec, x, grid.omega(m)));
    }
    total += row;
  }
  return grid.h_x * total;
}

double boundary_hs_norm(const Eigen::MatrixXcd& a, const Grid& grid) {
  if (static_cast<std::size_t>(a.rows()) != grid.n_x || static_cast<std::size_t>(a.cols()) != grid.n_x) {
    throw PreconditionError("boundary_hs_norm: matrix does not match the grid");
  }
  const auto first = static_cast<Eigen::Index>(grid.first_inside);
  const auto count = static_cast<Eigen::Index>(grid.count_inside);
  const auto rows = a.middleRows(first, count);
  return rows.squaredNorm() - rows.middleCols(first, count).squaredNorm();
}

SweepReport run_capacity(const SymbolSpec& spec, double S, const std::vector<double>& alphas,
                         const HarnessConfig& cfg) {
  check_alphas(alphas);
  SweepReport report = start_report("capacity", spec);
  report.power_S = S;
  const WaterfillSolution cont = waterfill_symbol(spec, S, cfg.quad);
  for (double alpha : alphas) {
    run_cell(report, alpha, [&](AlphaRecord& rec) {
      const Grid g = Grid::make(alpha, cfg.grid);
      rec.n_x = g.n_x;
      double defect = 0;
      const DiscreteOperator h = hermitize(quantize(spec, g), &defect);
      rec.hermitian_defect = defect;
      const Spectrum sp = eigh(interval_block(h), g);
      rec.min_eigenvalue = sp.min();
      if (sp.min() < -1e-10 * std::abs(sp.max())) {
        warn(report, "P L P has negative eigenvalues; they are left out of the water-filling");
      }
      const WaterfillSolution wf = waterfill_discrete(sp, S, alpha, false);
      rec.capacity_discrete = wf.capacity_rate;
      rec.water_level_discrete = wf.B;
      rec.capacity_symbol = cont.capacity_rate;
      rec.water_level_symbol = cont.B;
      rec.capacity_error = std::abs(wf.capacity_rate - cont.capacity_rate);
    });
  }
  add_fit(report, "capacity_error", "loglog", [](const AlphaRecord& r) { return r.capacity_error; });
  return report;
}

SweepReport run_convergence_sweep(const SymbolSpec& spec, double S, const std::vector<double>& alphas,
                                  const HarnessConfig& cfg) {
  check_alphas(alphas);
  SweepReport report = start_report("sweep", spec);
  report.power_S = S;
  const WaterfillSolution cont = waterfill_symbol(spec, S, cfg.quad);
  const double B = cont.B;
  const double support = std::max(2.0, 2.0 * B * sigma_sup(spec, cfg.quad));

  for (double alpha : alphas) {
    run_cell(report, alpha, [&](AlphaRecord& rec) {
      const Grid g = Grid::make(alpha, cfg.grid);
      rec.n_x = g.n_x;
      double defect = 0;
      const DiscreteOperator h = hermitize(quantize(spec, g), &defect);
      rec.hermitian_defect = defect;
      const Spectrum sp = eigh(interval_block(h), g);
      rec.min_eigenvalue = sp.min();
      if (sp.min() < -1e-10 * std::abs(sp.max())) {
        warn(report, "P L P has negative eigenvalues; they are left out of the water-filling");
      }
      const WaterfillSolution wf = waterfill_discrete(sp, S, alpha, false);
      rec.capacity_discrete = wf.capacity_rate;
      rec.water_level_discrete = wf.B;
      rec.capacity_symbol = cont.capacity_rate;
      rec.water_level_symbol = cont.B;
      rec.capacity_error = std::abs(wf.capacity_rate - cont.capacity_rate);

      const double eps = cfg.eps.at(alpha);
      RealFunction f;
      if (eps > 0.0) {
        rec.eps = eps;
        FEpsOptions opts;
        opts.support_hi = std::max(support, 1.0 + 2.0 * eps);
        f = scaled(build_f_eps(RateShape::log, eps, opts), B);
      } else {
        f = scaled(rate_r_function(), B);
      }
      const Spectrum full = eigh(h, true);
      if (B * full.max() > support) warn(report, "spectrum of L exceeds the support of the smoothed rate");
      const double tr_plp = sum_of(sp.values, f.value);
      const double tr_fl = trace_restricted_function(full, f.value);
      const double tr_lf = restricted_symbol_trace(spec, f.value, g);
      rec.error_total = (tr_plp - tr_lf) / alpha;
      rec.error_stability = (tr_plp - tr_fl) / alpha;
      rec.error_calculus = (tr_fl - tr_lf) / alpha;
      rec.hs_cross_norm = boundary_hs_norm(h.matrix, g);
    });
  }
  add_fit(report, "capacity_error", "loglog", [](const AlphaRecord& r) { return r.capacity_error; });
  add_fit(report, "abs_error_total", "loglog", [](const AlphaRecord& r) { return std::abs(r.error_total); });
  return report;
}

SweepReport run_stability_check(const SymbolSpec& spec, const RealFunction& f, const std::vector<double>& alphas,
                                const HarnessConfig& cfg) {
  check_alphas(alphas);
  SweepReport report = start_report("check-stability", spec);
  const auto env = envelope_for(spec, cfg);
  if (!env) {
    warn(report, "no kernel envelope for this symbol; padding tail not checked");
  } else if (envelope_tail(*env, cfg.grid.padding_m) > cfg.padding_tail_limit) {
    warn(report, tail_warning(cfg.padding_tail_limit));
  }
  for (double alpha : alphas) {
    run_cell(report, alpha, [&](AlphaRecord& rec) {
      const Grid g = Grid::make(alpha, cfg.grid);
      rec.n_x = g.n_x;
      double defect = 0;
      const DiscreteOperator h = hermitize(quantize(spec, g), &defect);
      rec.hermitian_defect = defect;
      const Spectrum sp = eigh(interval_block(h), g);
      const Spectrum full = eigh(h, true);
      rec.min_eigenvalue = sp.min();
      const double diff = (sum_of(sp.values, f.value) - trace_restricted_function(full, f.value)) / alpha;
      rec.error_stability = diff;
      rec.hs_cross_norm = boundary_hs_norm(h.matrix, g);
      if (f.second_derivative) {
        const double lo = std::min(0.0, full.min());
        const double hi = std::max(0.0, full.max());
        rec.f2_norm = sup_abs_second_derivative(f, lo, hi);
        if (alpha > 1.0 && rec.f2_norm > 0.0) {
          rec.stability_ratio = std::abs(diff) / (rec.f2_norm * std::log(alpha) / alpha);
        }
      }
    });
  }
  add_fit(report, "stability_ratio", "loglog", [](const AlphaRecord& r) { return r.stability_ratio; });
  add_fit(report, "abs_error_stability", "loglog", [](const AlphaRecord& r) { return std::abs(r.error_stability); });
  return report;
}

SweepReport run_hs_boundary_check(const SymbolSpec& spec, const std::vector<double>& alphas,
                                  const HarnessConfig& cfg) {
  check_alphas(alphas);
  SweepReport report = start_report("check-hs", spec);
  const auto env = envelope_for(spec, cfg);
  if (!env) warn(report, "no kernel envelope for this symbol; ||P L||_I2^2 bound not evaluated");
  const double psi_l1 = env ? envelope_l1(*env) : kNotComputed;

  for (double alpha : alphas) {
    run_cell(report, alpha, [&](AlphaRecord& rec) {
      const double padding = padding_for(alpha, cfg);
      if (env && envelope_tail(*env, padding) > cfg.padding_tail_limit) {
        warn(report, tail_warning(cfg.padding_tail_limit));
      }
      const Grid g = Grid::make_padded(alpha, padding, cfg.grid);
      rec.n_x = g.n_x;
      detail::RowTransform rt(g);
      const std::size_t N = rt.length();
      const std::size_t q = residue_count(spec, g.h_x);

      // |h k(x_i, x_i - d h)|^2 by offset d (mod N), cached per residue of i.
      std::vector<std::vector<double>> cache(q == 0 ? 0 : q);
      std::vector<double> scratch;
      std::vector<cd> samples(g.n_omega);
      auto row_weights = [&](std::size_t i) -> const std::vector<double>& {
        std::vector<double>* slot = q == 0 ? &scratch : &cache[i % q];
        if (q != 0 && !slot->empty()) return *slot;
        const double x = g.x(i);
        for (std::size_t m = 0; m < g.n_omega; ++m) samples[m] = eval_symbol(spec, x, g.omega(m));
        const auto k = rt.kernel_from_samples(samples);
        slot->resize(N);
        for (std::size_t d = 0; d < N; ++d) (*slot)[d] = std::norm(g.h_x * k[d]);
        return *slot;
      };

      double row_total = 0;
      double inside_total = 0;
      for (std::size_t i = g.first_inside; i < g.first_inside + g.count_inside; ++i) {
        const auto& w = row_weights(i);
        for (std::size_t j = 0; j < g.n_x; ++j) {
          const std::size_t d = (i + N - j) % N;
          row_total += w[d];
          if (g.inside(j)) inside_total += w[d];
        }
      }
      rec.hs_row_norm = row_total;
      rec.hs_cross_norm = row_total - inside_total;
      rec.hs_row_bound = alpha * psi_l1;
    });
  }
  add_fit(report, "hs_cross_norm", "semilog", [](const AlphaRecord& r) { return r.hs_cross_norm; });
  add_fit(report, "hs_cross_norm", "linear", [](const AlphaRecord& r) { return r.hs_cross_norm; });
  return report;
}

SweepReport run_symbol_calculus_check(const SymbolSpec& spec, const std::vector<double>& s_values,
                                      const std::vector<double>& alphas, const HarnessConfig& cfg) {
  check_alphas(alphas);
  SweepReport report = start_report("check-product", spec);
  if (spec.smoothness_order < 3) warn(report, "symbol is not C3; Q_alpha is recorded without a bound");
  if (!spec.time_invariant && !spec.period_x) warn(report, "symbol is not periodic; Q_alpha is recorded without a bound");
  for (double s : s_values) {
    if (!std::isfinite(s)) throw ConfigError("s values must be finite", "s_values");
  }
  for (double alpha : alphas) {
    run_cell(report, alpha, [&](AlphaRecord& rec) {
      const Grid g = Grid::make(alpha, cfg.grid);
      rec.n_x = g.n_x;
      const DiscreteOperator ls = quantize(spec, g);
      rec.hermitian_defect = ls.hermitian_defect;
      const auto first = static_cast<Eigen::Index>(g.first_inside);
      const auto count = static_cast<Eigen::Index>(g.count_inside);
      for (double s : s_values) {
        if (s == 0.0) {
          // e(0) = 1 quantizes to the identity, so D vanishes.
          rec.q_alpha[s] = 0.0;
          continue;
        }
        const DiscreteOperator lt = quantize(SymbolFunctionSpec{spec, PointwiseMap::exp_i2pi_s, s, {}}, g);
        const DiscreteOperator lst = quantize(SymbolFunctionSpec{spec, PointwiseMap::product_sigma_exp, s, {}}, g);
        const Eigen::MatrixXcd d = (ls.matrix * lt.matrix.middleCols(first, count)) - lst.matrix.middleCols(first, count);
        rec.q_alpha[s] = schatten_norm(d, 1);
      }
    });
  }
  for (double s : s_values) {
    if (s == 0.0) continue;
    add_fit(report, q_alpha_label(s), "loglog", [s](const AlphaRecord& r) {
      const auto it = r.q_alpha.find(s);
      return it == r.q_alpha.end() ? kNotComputed : it->second;
    });
  }
  return report;
}

Eigen::MatrixXcd symbol_difference_operator(const SymbolSpec& spec, double s, const Grid& grid, DifferenceKernel kind) {
  const std::size_t q = residue_count(spec, grid.h_x);
  if (q == 0 || (!spec.time_invariant && std::abs(*spec.period_x - 1.0) > 1e-12)) {
    throw UnsupportedError("difference kernels need a 1-periodic or time-invariant symbol", "symbol");
  }
  const std::size_t n = grid.n_x;
  const std::size_t N = grid.dft_length;
  const std::size_t M = grid.n_omega;

  // Residue r stands for x_min + r h_x modulo 1.
  Eigen::MatrixXcd tau(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(M));
  Eigen::MatrixXd sig(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(M));
  for (std::size_t r = 0; r < q; ++r) {
    const double x = grid.x(r);
    for (std::size_t m = 0; m < M; ++m) {
      const double v = eval_symbol(spec, x, grid.omega(m));
      sig(r, m) = v;
      tau(r, m) = std::polar(1.0, 2.0 * std::numbers::pi * s * v);
    }
  }
  std::vector<cd> twiddle(N);
  for (std::size_t k = 0; k < N; ++k) {
    twiddle[k] = std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(N));
  }
  std::vector<double> weight(M);
  for (std::size_t m = 0; m < M; ++m) weight[m] = grid.omega_weight(m);
  const auto Nl = static_cast<long>(N);
  const auto ql = static_cast<long>(q);

  // t(r_i, d) for offsets d = i - j in (-n, n), stored at d + n - 1.
  const std::size_t span = 2 * n - 1;
  Eigen::MatrixXcd table(static_cast<Eigen::Index>(q), static_cast<Eigen::Index>(span));
  for (std::size_t r = 0; r < q; ++r) {
    const auto ri = static_cast<Eigen::Index>(r);
    for (std::size_t e = 0; e < span; ++e) {
      const long d = static_cast<long>(e) - static_cast<long>(n - 1);
      const auto rj = static_cast<Eigen::Index>(((static_cast<long>(r) - d) % ql + ql) % ql);
      const long step = ((d % Nl) + Nl) % Nl;
      long k = ((grid.omega_index(0) * d) % Nl + Nl) % Nl;
      cd acc = 0;
      for (std::size_t m = 0; m < M; ++m) {
        const auto mi = static_cast<Eigen::Index>(m);
        cd diff = tau(rj, mi) - tau(ri, mi);
        if (kind == DifferenceKernel::weighted_by_sigma) diff *= sig(ri, mi);
        acc += weight[m] * twiddle[static_cast<std::size_t>(k)] * diff;
        k += step;
        if (k >= Nl) k -= Nl;
      }
      table(ri, static_cast<Eigen::Index>(e)) = grid.h_x * acc;
    }
  }

  Eigen::MatrixXcd out(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto ri = static_cast<Eigen::Index>(i % q);
    for (std::size_t j = 0; j < n; ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          table(ri, static_cast<Eigen::Index>(i + n - 1 - j));
    }
  }
  return out;
}

SweepReport run_trace_norm_scaling(const SymbolSpec& spec, double s, const std::vector<double>& alphas,
                                   const HarnessConfig& cfg) {
  check_alphas(alphas);
  if (!spec.time_invariant && !(spec.period_x && std::abs(*spec.period_x - 1.0) <= 1e-12)) {
    throw UnsupportedError("trace norm scaling needs a 1-periodic or time-invariant symbol", "symbol");
  }
  for (double a : alphas) {
    if (a != std::round(a)) throw ConfigError("trace norm scaling needs integer alphas", "alphas");
  }
  SweepReport report = start_report("check-tracenorm", spec);
  for (double alpha : alphas) {
    run_cell(report, alpha, [&](AlphaRecord& rec) {
      const Grid g = Grid::make(alpha, cfg.grid);
      rec.n_x = g.n_x;
      const auto first = static_cast<Eigen::Index>(g.first_inside);
      const auto count = static_cast<Eigen::Index>(g.count_inside);
      const Eigen::MatrixXcd t = symbol_difference_operator(spec, s, g, DifferenceKernel::plain);
      rec.tp_i1 = schatten_norm(t.middleCols(first, count), 1);
      rec.tp_i2 = schatten_norm(t.middleCols(first, count), 2);
      const Eigen::MatrixXcd tp = symbol_difference_operator(spec, s, g, DifferenceKernel::weighted_by_sigma);
      rec.tpp_i1 = schatten_norm(tp.middleCols(first, count), 1);
      rec.tpp_i2 = schatten_norm(tp.middleCols(first, count), 2);
    });
  }
  add_fit(report, "tp_i1", "loglog", [](const AlphaRecord& r) { return r.tp_i1; });
  add_fit(report, "tp_i2", "loglog", [](const AlphaRecord& r) { return r.tp_i2; });
  add_fit(report, "tpp_i1", "loglog", [](const AlphaRecord& r) { return r.tpp_i1; });
  add_fit(report, "tpp_i2", "loglog", [](const AlphaRecord& r) { return r.tpp_i2; });
  return report;
}

}  // namespace ddcap
