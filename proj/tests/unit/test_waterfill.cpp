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
#include <complex>
#include <vector>

#include <catch_amalgamated.hpp>

#include "ddcap/errors.hpp"
#include "ddcap/fit.hpp"
#include "ddcap/harness.hpp"
#include "ddcap/waterfill.hpp"
#include "oracles.hpp"

using Catch::Approx;
using namespace ddcap;

namespace {

SymbolSpec custom_time_invariant(std::function<double(double)> f) {
  SymbolSpec s;
  s.family = "custom";
  s.time_invariant = true;
  s.evaluator = [f = std::move(f)](double, double w) { return f(w); };
  return s;
}

}  // namespace

TEST_CASE("rate functions", "[waterfill]") {
  CHECK(rate_r(1.0) == 0.0);
  CHECK(rate_p(1.0) == 0.0);
  for (double x : {-3.0, 0.0, 0.5, 0.999}) {
    CHECK(rate_r(x) == 0.0);
    CHECK(rate_p(x) == 0.0);
  }
  CHECK(rate_r(1.0 + 1e-12) == Approx(0.0).margin(1e-11));
  CHECK(rate_r(std::exp(1.0)) == Approx(1.0));
  CHECK(rate_p(4.0) == Approx(0.75));
}

TEST_CASE("discrete water-filling oracles", "[waterfill]") {
  const std::vector<double> a{1.0, 1.0};
  const auto s1 = waterfill_discrete(a, 2.0, 1.0);
  CHECK(s1.B == Approx(2.0).epsilon(1e-12));
  CHECK(s1.capacity_rate == Approx(2.0 * std::log(2.0)).epsilon(1e-12));
  CHECK(s1.active_count == 2);

  const std::vector<double> b{4.0, 1.0};
  const auto s2 = waterfill_discrete(b, 0.5, 1.0);
  CHECK(s2.B == Approx(0.75).epsilon(1e-12));
  CHECK(s2.capacity_rate == Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(s2.active_count == 1);

  const auto s3 = waterfill_discrete(b, 0.0, 1.0);
  CHECK(s3.B == Approx(0.25));
  CHECK(s3.capacity_rate == 0.0);
  CHECK(s3.active_count == 0);
}

TEST_CASE("discrete water-filling errors", "[waterfill]") {
  CHECK_THROWS_AS(waterfill_discrete(std::vector<double>{-1.0, 0.0}, 1.0, 1.0), NumericalError);
  CHECK_THROWS_AS(waterfill_discrete(std::vector<double>{1.0}, -1.0, 1.0), DomainError);
  CHECK_THROWS_AS(waterfill_discrete(std::vector<double>{1.0, -0.5}, 1.0, 1.0, true), NumericalError);
  CHECK_NOTHROW(waterfill_discrete(std::vector<double>{1.0, -0.5}, 1.0, 1.0, false));
  CHECK_NOTHROW(waterfill_discrete(std::vector<double>{1.0, -1e-13}, 1.0, 1.0, true));
}

TEST_CASE("water-filling invariants", "[waterfill][property]") {
  const std::vector<double> eigs{3.0, 2.5, 1.0, 0.4, 0.1, 0.01, 0.0};
  double last_B = 0;
  double last_rate = -1;
  for (double S = 0.0; S <= 20.0; S += 0.37) {
    CAPTURE(S);
    const auto sol = waterfill_discrete(eigs, S, 2.0);
    if (S > 0) CHECK(sol.power_achieved == Approx(S).epsilon(1e-9));
    CHECK(sol.capacity_rate >= 0.0);
    CHECK((sol.capacity_rate == 0.0) == (sol.active_count == 0));
    CHECK(sol.B > last_B);
    CHECK(sol.capacity_rate >= last_rate);
    // Recompute both sums from the definition.
    double power = 0;
    double rate = 0;
    for (double l : eigs) {
      power += sol.B * rate_p(sol.B * l);
      rate += rate_r(sol.B * l);
    }
    CHECK(power / 2.0 == Approx(sol.power_achieved).epsilon(1e-9).margin(1e-14));
    CHECK(rate / 2.0 == Approx(sol.capacity_rate).epsilon(1e-9).margin(1e-14));
    last_B = sol.B;
    last_rate = sol.capacity_rate;
  }
}

TEST_CASE("scale coherence", "[waterfill][property]") {
  const std::vector<double> eigs{3.0, 2.5, 1.0, 0.4};
  for (double t : {0.5, 2.0, 7.0}) {
    std::vector<double> scaled_eigs;
    for (double l : eigs) scaled_eigs.push_back(t * l);
    const auto a = waterfill_discrete(eigs, 1.3, 1.0);
    const auto b = waterfill_discrete(scaled_eigs, 1.3 / t, 1.0);
    CHECK(b.B == Approx(a.B / t).epsilon(1e-12));
    CHECK(b.capacity_rate == Approx(a.capacity_rate).epsilon(1e-12));
    CHECK(b.active_count == a.active_count);

    const auto cg = make_symbol("cosine_gauss");
    SymbolSpec scaled = cg;
    scaled.evaluator = [t, f = cg.evaluator](double x, double w) { return t * f(x, w); };
    const auto c = waterfill_symbol(cg, 0.8);
    const auto d = waterfill_symbol(scaled, 0.8 / t);
    CHECK(d.B == Approx(c.B / t).epsilon(1e-10));
    CHECK(d.capacity_rate == Approx(c.capacity_rate).epsilon(1e-10));
  }
}

TEST_CASE("symbol water-filling", "[waterfill]") {
  SECTION("flat band closed form") {
    for (auto [c, W, S] : {std::tuple{1.0, 0.5, 1.0}, std::tuple{2.0, 0.25, 0.3}, std::tuple{0.5, 1.0, 4.0}}) {
      const auto sol = waterfill_symbol(make_symbol("band_constant", {{"c", c}, {"W", W}}), S);
      CHECK(sol.B == Approx(1.0 / c + S / (2.0 * W)).epsilon(1e-12));
      CHECK(sol.capacity_rate == Approx(oracle::shannon_rate(c, W, S)).epsilon(1e-12));
      CHECK(sol.power_achieved == Approx(S).epsilon(1e-9));
    }
    const auto sol = waterfill_symbol(make_symbol("band_constant", {{"c", 1.0}, {"W", 0.5}}), 1.0);
    CHECK(sol.B == Approx(2.0).epsilon(1e-12));
    CHECK(sol.capacity_rate == Approx(std::log(2.0)).epsilon(1e-12));
  }

  SECTION("zero power") {
    const auto sol = waterfill_symbol(make_symbol("cosine_gauss"), 0.0);
    // max sigma = 1 sits between midpoint omega nodes.
    CHECK(sol.B == Approx(1.0).epsilon(1e-4));
    CHECK(sol.B >= 1.0);
    CHECK(sol.capacity_rate == 0.0);
  }

  SECTION("quadrature self-convergence") {
    const auto cg = make_symbol("cosine_gauss");
    const auto a = waterfill_symbol(cg, 1.0, QuadratureConfig::from_density(4.0));
    const auto b = waterfill_symbol(cg, 1.0, QuadratureConfig::from_density(8.0));
    CHECK(std::abs(a.capacity_rate - b.capacity_rate) <= 1e-4);
  }

  SECTION("unsupported and degenerate symbols") {
    SymbolSpec drifting;
    drifting.family = "drifting";
    drifting.evaluator = [](double x, double w) { return std::exp(-x * x - w * w); };
    CHECK_THROWS_AS(waterfill_symbol(drifting, 1.0), UnsupportedError);
    CHECK_THROWS_AS(waterfill_symbol(custom_time_invariant([](double) { return -1.0; }), 1.0), NumericalError);
    CHECK_THROWS_AS(waterfill_symbol(make_symbol("cosine_gauss"), -1.0), DomainError);
  }
}

TEST_CASE("smooth step", "[waterfill][f_eps]") {
  CHECK(smooth_step(-1.0) == 0.0);
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(2.0) == 1.0);
  CHECK(smooth_step(0.5) == Approx(0.5).epsilon(1e-12));
  double last = 0;
  for (double t = 0.01; t < 1.0; t += 0.01) {
    const double v = smooth_step(t);
    CHECK(v >= last);
    CHECK(smooth_step(1.0 - t) == Approx(1.0 - v).margin(1e-12));
    const double h = 1e-5;
    CHECK(smooth_step_d1(t) == Approx((smooth_step(t + h) - smooth_step(t - h)) / (2 * h)).margin(1e-6));
    CHECK(smooth_step_d2(t) == Approx((smooth_step_d1(t + h) - smooth_step_d1(t - h)) / (2 * h)).margin(1e-4));
    last = v;
  }
}

TEST_CASE("f_eps construction", "[waterfill][f_eps]") {
  const double eps = 0.1;
  FEpsOptions opts;
  opts.support_hi = 6.0;
  const RealFunction f = build_f_eps(RateShape::log, eps, opts);

  for (double x : {-1.0, 0.0, 0.5, 1.0}) CHECK(f(x) == 0.0);
  for (double x : {1.1, 1.5, 3.0, 6.0}) CHECK(f(x) == Approx(std::log(x)).epsilon(1e-14));
  for (double x : {7.0, 8.0, 100.0}) CHECK(f(x) == 0.0);

  const double bound = std::log(1.0 + eps);
  for (double x = 0.9; x < 1.2; x += 0.001) CHECK(std::abs(f(x) - rate_r(x)) <= bound + 1e-15);

  const RealFunction fine = build_f_eps(RateShape::log, 0.01, opts);
  CHECK(fine(1.05) == Approx(std::log(1.05)).epsilon(1e-14));

  const RealFunction ratio = build_f_eps(RateShape::ratio, eps, opts);
  CHECK(ratio(2.0) == Approx(0.5).epsilon(1e-14));
  FEpsOptions poly = opts;
  poly.poly_coeffs = {0.0, 0.0, 1.0};
  CHECK(build_f_eps(RateShape::polynomial, eps, poly)(2.0) == Approx(4.0).epsilon(1e-14));

  for (double x = 0.95; x < 7.2; x += 0.013) {
    const double h = 1e-4;
    CHECK(f.second_derivative(x) ==
          Approx((f(x + h) - 2 * f(x) + f(x - h)) / (h * h)).epsilon(1e-3).margin(1e-2 * (1 + std::abs(f.second_derivative(x)))));
  }

  CHECK_THROWS_AS(build_f_eps(RateShape::log, 0.0), DomainError);
  CHECK_THROWS_AS(build_f_eps(RateShape::log, -0.1), DomainError);
  CHECK_THROWS_AS(build_f_eps(RateShape::polynomial, eps), DomainError);
}

TEST_CASE("f_eps Fourier decay", "[waterfill][f_eps]") {
  FEpsOptions opts;
  opts.support_hi = 4.0;
  const RealFunction f = build_f_eps(RateShape::log, 0.1, opts);
  // Trapezoid transform on the support [1, 5]; the integrand is smooth and
  // vanishes with all derivatives at both ends.
  const int n = 1 << 15;
  const double h = 4.0 / n;
  std::vector<double> samples(n);
  for (int k = 0; k < n; ++k) samples[static_cast<std::size_t>(k)] = f(1.0 + k * h);
  auto magnitude = [&](double w) {
    std::complex<double> acc = 0;
    for (int k = 0; k < n; ++k) acc += samples[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * oracle::pi * w * (1.0 + k * h));
    return std::abs(acc) * h;
  };
  // Envelope over unit windows, then a log-log slope over [10, 100].
  std::vector<double> ws;
  std::vector<double> env;
  for (double w0 : {10.0, 14.0, 20.0, 28.0, 40.0, 56.0, 80.0, 99.0}) {
    double m = 0;
    for (double w = w0; w < w0 + 1.0; w += 0.125) m = std::max(m, magnitude(w));
    ws.push_back(w0);
    env.push_back(m);
  }
  const LineFit fit = fit_loglog(ws, env);
  CHECK(fit.slope <= -4.0);
}

TEST_CASE("f_eps extension does not change traces", "[waterfill][f_eps]") {
  FEpsOptions narrow;
  narrow.support_hi = 4.0;
  narrow.extension_width = 1.0;
  FEpsOptions wide = narrow;
  wide.extension_width = 3.0;
  const auto spec = make_symbol("band_constant");
  const auto a = run_stability_check(spec, scaled(build_f_eps(RateShape::log, 0.1, narrow), 3.0), {8.0});
  const auto b = run_stability_check(spec, scaled(build_f_eps(RateShape::log, 0.1, wide), 3.0), {8.0});
  CHECK(a.records[0].error_stability == b.records[0].error_stability);
}

TEST_CASE("second derivative sup norm", "[waterfill][f_eps]") {
  CHECK(sup_abs_second_derivative(square_function(), -1.0, 1.0) == 2.0);
  CHECK(sup_abs_second_derivative(scaled(square_function(), 3.0), 0.0, 1.0) == Approx(18.0));
  CHECK_THROWS_AS(sup_abs_second_derivative(rate_r_function(), 0.0, 1.0), DomainError);
}

TEST_CASE("discrete and symbol water-filling agree for a time-invariant symbol", "[waterfill][property]") {
  const auto spec = make_symbol("band_constant", {{"c", 1.0}, {"W", 0.25}});
  const auto rep = run_capacity(spec, 1.0, {16.0, 32.0});
  REQUIRE(rep.records.size() == 2);
  CHECK(rep.records[1].capacity_error < rep.records[0].capacity_error);
  CHECK(rep.records[1].capacity_error <= 0.05 * oracle::shannon_rate(1.0, 0.25, 1.0));
}
