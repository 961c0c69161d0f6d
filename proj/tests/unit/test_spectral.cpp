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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <catch_amalgamated.hpp>

#include "ddcap/errors.hpp"
#include "ddcap/quantize.hpp"
#include "ddcap/spectral.hpp"
#include "ddcap/waterfill.hpp"
#include "oracles.hpp"

using Catch::Approx;
using namespace ddcap;

namespace {

Eigen::MatrixXcd random_hermitian(Eigen::Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> nd;
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < n; ++i) a(i, j) = {nd(rng), nd(rng)};
  }
  return 0.5 * (a + a.adjoint());
}

DiscreteOperator as_operator(const Eigen::MatrixXcd& m, const Grid& g) {
  DiscreteOperator op;
  op.matrix = m;
  op.grid = g;
  return op;
}

}  // namespace

TEST_CASE("eigh examples", "[spectral]") {
  const Grid g;
  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = 2.0;
  const Spectrum s = eigh(d, g);
  REQUIRE(s.values.size() == 2);
  CHECK(s.values[0] == Approx(2.0));
  CHECK(s.values[1] == Approx(1.0));

  const Grid pg = Grid::make(2.0);
  const Spectrum ps = eigh(projection(pg));
  std::size_t ones = 0;
  for (double v : ps.values) {
    const bool zero = std::abs(v) <= 1e-14;
    const bool one = std::abs(v - 1.0) <= 1e-14;
    CHECK((zero || one));
    ones += one ? 1 : 0;
  }
  CHECK(ones == pg.count_inside);
}

TEST_CASE("prolate eigenvalue count", "[spectral]") {
  const Grid g = Grid::make(16.0);
  const auto H = hermitize(quantize(make_symbol("band_constant", {{"c", 1.0}, {"W", 0.25}}), g));
  const Spectrum s = eigh(interval_block(H), g);
  const auto count = std::count_if(s.values.begin(), s.values.end(), [](double v) { return v > 0.5; });
  CHECK(count >= 6);
  CHECK(count <= 10);
}

TEST_CASE("spectrum invariants", "[spectral][property]") {
  const Grid g = Grid::make(4.0);
  for (const auto& name : registered_families()) {
    CAPTURE(name);
    const auto H = hermitize(quantize(make_symbol(name), g));
    const Spectrum s = eigh(H, true);
    CHECK(std::is_sorted(s.values.rbegin(), s.values.rend()));
    double sum = 0;
    for (double v : s.values) sum += v;
    CHECK(sum == Approx(H.matrix.trace().real()).epsilon(1e-9));
    CHECK(eigen_residual(H.matrix, s) <= 1e-10);
    const Eigen::MatrixXcd& V = *s.basis;
    CHECK((V.adjoint() * V - Eigen::MatrixXcd::Identity(V.cols(), V.cols())).cwiseAbs().maxCoeff() <= 1e-10);
  }
}

TEST_CASE("eigen residual at 2048", "[spectral][property]") {
  const Grid g;
  const Eigen::MatrixXcd a = random_hermitian(2048, 7);
  const Spectrum s = eigh(a, g, true);
  CHECK(eigen_residual(a, s) <= 1e-10);
}

TEST_CASE("eigh rejects non-Hermitian input", "[spectral]") {
  const Grid g = Grid::make(2.0);
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(2, 2);
  a(0, 1) = 1.0;
  CHECK_THROWS_AS(eigh(a, Grid{}), PreconditionError);
  const auto L = quantize(make_symbol("two_tone"), g);
  REQUIRE(L.hermitian_defect > 1e-8);
  CHECK_THROWS_AS(eigh(L), PreconditionError);
}

TEST_CASE("schatten norms", "[spectral]") {
  Eigen::VectorXcd u(3);
  u << 1.0, std::complex<double>(0, 2), -2.0;
  Eigen::VectorXcd v(4);
  v << 0.5, 1.0, std::complex<double>(1, 1), 0.0;
  const Eigen::MatrixXcd r1 = u * v.adjoint();
  CHECK(schatten_norm(r1, 1) == Approx(u.norm() * v.norm()).epsilon(1e-12));
  CHECK(schatten_norm(r1, 2) == Approx(u.norm() * v.norm()).epsilon(1e-12));

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = -4.0;
  CHECK(schatten_norm(d, 1) == Approx(7.0));
  CHECK(schatten_norm(d, 2) == Approx(5.0));
  CHECK_THROWS_AS(schatten_norm(d, 3), DomainError);
  CHECK(singular_values(Eigen::MatrixXcd(0, 3)).empty());
}

TEST_CASE("boundary Hilbert-Schmidt norm against a direct double sum", "[spectral]") {
  const Grid g = Grid::make(16.0);
  const auto L = quantize(make_symbol("band_constant", {{"c", 1.0}, {"W", 0.25}}), g);
  const auto P = projection(g);
  const auto Q = subtract(identity_operator(g), P);
  const double hs = std::pow(schatten_norm(compose(compose(P, L), Q), 2), 2);

  const double period = 1.0 / g.h_omega;
  double direct = 0;
  for (std::size_t i = 0; i < g.n_x; ++i) {
    if (!g.inside(i)) continue;
    for (std::size_t j = 0; j < g.n_x; ++j) {
      if (g.inside(j)) continue;
      const double k = oracle::box_kernel_periodic(1.0, 0.25, period, g.x(i) - g.x(j));
      direct += g.h_x * g.h_x * k * k;
    }
  }
  CHECK(hs == Approx(direct).epsilon(1e-9));
}

TEST_CASE("schatten monotonicity", "[spectral][property]") {
  const Grid g = Grid::make(2.0);
  for (const auto& name : registered_families()) {
    CAPTURE(name);
    const auto L = quantize(make_symbol(name), g);
    CHECK(schatten_norm(L, 2) <= schatten_norm(L, 1) * (1.0 + 1e-12));
    const auto D = compose(L, projection(g));
    CHECK(schatten_norm(D, 2) <= schatten_norm(D, 1) * (1.0 + 1e-12));
  }
  const Eigen::MatrixXcd a = random_hermitian(50, 3);
  CHECK(schatten_norm(a, 2) <= schatten_norm(a, 1));
}

TEST_CASE("restricted traces", "[spectral]") {
  SECTION("identity") {
    const Grid g = Grid::make(65.0 / 16.0);
    CHECK(trace_restricted(identity_operator(g)) == 65.0);
  }
  SECTION("P L P and L agree on the diagonal") {
    const Grid g = Grid::make(4.0);
    const auto L = quantize(make_symbol("square_smooth"), g);
    CHECK(trace_restricted(restrict_to_interval(L)) == trace_restricted(L));
  }
  SECTION("flat band") {
    const Grid g = Grid::make(8.0);
    const auto L = quantize(make_symbol("band_constant", {{"c", 1.0}, {"W", 0.5}}), g);
    CHECK(trace_restricted(L) == Approx(8.0).margin(1e-6));
  }
}

TEST_CASE("spectral functional calculus", "[spectral]") {
  const Grid g = Grid::make(4.0);
  const auto PLP = restrict_to_interval(hermitize(quantize(make_symbol("cosine_gauss"), g)));

  const auto same = apply_spectral_function(PLP, [](double x) { return x; });
  CHECK((same.matrix - PLP.matrix).cwiseAbs().maxCoeff() <= 1e-9);

  const auto sq = apply_spectral_function(PLP, [](double x) { return x * x; });
  const auto prod = compose(PLP, PLP);
  CHECK((sq.matrix - prod.matrix).norm() <= 1e-9 * prod.matrix.norm());

  Eigen::MatrixXcd d = Eigen::MatrixXcd::Zero(2, 2);
  d(0, 0) = 4.0;
  d(1, 1) = 1.0;
  const auto r = apply_spectral_function(as_operator(d, Grid{}), [](double x) { return rate_r(0.75 * x); });
  CHECK(r.matrix(0, 0).real() == Approx(std::log(3.0)).epsilon(1e-12));
  CHECK(std::abs(r.matrix(1, 1)) <= 1e-14);
  CHECK(std::abs(r.matrix(0, 1)) <= 1e-14);

  CHECK_THROWS_AS(apply_spectral_function(as_operator(d * 0.0, Grid{}), [](double x) { return std::log(x); }),
                  DomainError);
}

TEST_CASE("quadratic trace identity for Hermitian operators", "[spectral][property]") {
  const Grid g = Grid::make(2.0);
  for (unsigned seed : {1u, 2u, 3u}) {
    CAPTURE(seed);
    const DiscreteOperator L = as_operator(random_hermitian(static_cast<Eigen::Index>(g.n_x), seed), g);
    const Spectrum full = eigh(L, true);
    const Spectrum inner = eigh(interval_block(L), g);
    double tr_plp2 = 0;
    for (double v : inner.values) tr_plp2 += v * v;
    const double tr_l2 = trace_restricted_function(full, [](double x) { return x * x; });
    const auto P = projection(g);
    const auto Q = subtract(identity_operator(g), P);
    const double hs = std::pow(schatten_norm(compose(compose(P, L), Q), 2), 2);
    CHECK((tr_plp2 - tr_l2) == Approx(-hs).epsilon(1e-9));
  }
}

TEST_CASE("negative eigenvalue clipping", "[spectral]") {
  Spectrum s;
  s.values = {2.0, 1.0, -1e-12, -0.5};
  Spectrum t = s;
  CHECK_THROWS_AS(clip_negative(t, true), NumericalError);
  t = s;
  CHECK(clip_negative(t, false) == -0.5);
  CHECK(t.values[2] == 0.0);
  CHECK(t.values[3] == -0.5);
  Spectrum u;
  u.values = {1.0, -1e-12};
  CHECK(clip_negative(u, true) == -1e-12);
  CHECK(u.values[1] == 0.0);
}
