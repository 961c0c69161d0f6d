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
#include <vector>

#include <catch_amalgamated.hpp>

#include "ddcap/errors.hpp"
#include "ddcap/quantize.hpp"
#include "ddcap/spectral.hpp"
#include "oracles.hpp"

using Catch::Approx;
using namespace ddcap;

TEST_CASE("quantize examples", "[quantize]") {
  const Grid g = Grid::make(4.0);

  SECTION("flat band diagonal") {
    const auto L = quantize(make_symbol("band_constant", {{"c", 1.0}, {"W", 0.5}}), g);
    CHECK(L.kind == OperatorKind::quantized);
    CHECK(L.size() == g.n_x);
    for (Eigen::Index i = 0; i < L.matrix.rows(); ++i) CHECK(L.matrix(i, i).real() == Approx(g.h_x).epsilon(1e-12));
  }

  SECTION("zero symbol") {
    SymbolFunctionSpec zero{make_symbol("cosine_gauss"), PointwiseMap::f_eps, 0.0, [](double) { return 0.0; }};
    CHECK(quantize(zero, g).matrix.cwiseAbs().maxCoeff() == 0.0);
  }

  SECTION("time-invariant symbols are Toeplitz") {
    for (const char* name : {"band_constant"}) {
      const auto L = quantize(make_symbol(name), g).matrix;
      double worst = 0;
      for (Eigen::Index i = 1; i < L.rows(); ++i) {
        for (Eigen::Index j = 1; j < L.cols(); ++j) worst = std::max(worst, std::abs(L(i, j) - L(i - 1, j - 1)));
      }
      CHECK(worst <= 1e-12);
    }
  }

  SECTION("aliasing") {
    GridConfig cfg;
    cfg.h_x = 0.25;
    CHECK_THROWS_AS(quantize(make_symbol("cosine_gauss"), Grid::make(4.0, cfg)), AliasingError);
  }
}

TEST_CASE("projection", "[quantize]") {
  const Grid g = Grid::make_padded(4.0, 2.0);
  CHECK(g.x_min == -2.0);
  CHECK(g.x_max == 6.0);
  const auto P = projection(g);
  CHECK(P.kind == OperatorKind::projection);
  std::size_t inside = 0;
  for (std::size_t i = 0; i < g.n_x; ++i) inside += (g.x(i) >= 0.0 && g.x(i) < 4.0) ? 1 : 0;
  CHECK(schatten_norm(P, 1) == Approx(static_cast<double>(inside)));
  CHECK(inside == 64);
  CHECK((P.matrix * P.matrix - P.matrix).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(static_cast<Eigen::Index>(g.n_x));
  const Eigen::VectorXcd pv = P.matrix * ones;
  for (std::size_t i = 0; i < g.n_x; ++i) CHECK(pv(static_cast<Eigen::Index>(i)).real() == (g.inside(i) ? 1.0 : 0.0));
  CHECK(compose(P, P).matrix == P.matrix);
}

TEST_CASE("operator algebra", "[quantize]") {
  const Grid g = Grid::make(2.0);
  const auto spec = make_symbol("cosine_gauss");
  const auto L = quantize(spec, g);

  CHECK(compose(L, identity_operator(g)).matrix == L.matrix);
  CHECK(compose(L, identity_operator(g)).kind == OperatorKind::composite);
  CHECK(adjoint(adjoint(L)).matrix == L.matrix);
  CHECK(subtract(L, L).matrix.cwiseAbs().maxCoeff() == 0.0);

  const auto tau0 = quantize(SymbolFunctionSpec{spec, PointwiseMap::exp_i2pi_s, 0.0, {}}, g);
  CHECK((compose(L, tau0).matrix - L.matrix).cwiseAbs().maxCoeff() <= 1e-12);

  const auto P = projection(g);
  CHECK((compose(P, L).matrix - P.matrix * L.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK((compose(L, P).matrix - L.matrix * P.matrix).cwiseAbs().maxCoeff() == 0.0);
  CHECK((restrict_to_interval(L).matrix - P.matrix * L.matrix * P.matrix).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(compose(L, quantize(spec, Grid::make(3.0))), PreconditionError);
  CHECK_THROWS_AS(subtract(L, quantize(spec, Grid::make(3.0))), PreconditionError);
}

TEST_CASE("hermitize", "[quantize]") {
  const Grid g = Grid::make(2.0);
  const auto L = quantize(make_symbol("two_tone"), g);
  double defect = -1;
  const auto H = hermitize(L, &defect);
  CHECK(defect == Approx(L.hermitian_defect));
  CHECK(H.hermitian_defect == 0.0);
  CHECK(estimate_hermitian_defect(H.matrix) == 0.0);
  CHECK(hermitize(H).matrix == H.matrix);

  // Power iteration against the exact operator norm of the skew part.
  const Eigen::MatrixXcd skew = 0.5 * (L.matrix - L.matrix.adjoint());
  const double exact = singular_values(skew).front();
  CHECK(L.hermitian_defect == Approx(exact).epsilon(1e-6));

  const auto band = quantize(make_symbol("band_constant"), Grid::make(8.0));
  CHECK(band.hermitian_defect <= 1e-10);
}

TEST_CASE("Nystrom self-convergence", "[quantize][property][nystrom]") {
  GridConfig fine;
  fine.h_x = 1.0 / 32.0;
  for (const auto& name : registered_families()) {
    CAPTURE(name);
    const auto spec = make_symbol(name);
    const Spectrum a = eigh(interval_block(hermitize(quantize(spec, Grid::make(4.0)))), Grid::make(4.0));
    const Spectrum b = eigh(interval_block(hermitize(quantize(spec, Grid::make(4.0, fine)))), Grid::make(4.0, fine));
    for (std::size_t k = 0; k < a.values.size() && a.values[k] > 1e-3; ++k) {
      CAPTURE(k);
      CHECK(std::abs(a.values[k] - b.values[k]) <= 0.01 * a.values[k]);
    }
  }
}

TEST_CASE("operator norm is bounded by the envelope", "[quantize][property]") {
  const Grid g = Grid::make(4.0);
  for (const auto& name : registered_families()) {
    CAPTURE(name);
    const auto spec = make_symbol(name);
    const double op = singular_values(quantize(spec, g).matrix).front();
    CHECK(op <= envelope_sqrt_l1(default_envelope(spec), g.length()) * (1.0 + 1e-6));
  }
}

TEST_CASE("trace identity", "[quantize][property]") {
  const Grid g = Grid::make(4.0);
  const auto spec = make_symbol("cosine_gauss");
  const auto L = quantize(spec, g);
  const KernelTable k = symbol_to_kernel(spec, g);
  double diag = 0;
  for (std::size_t i = g.first_inside; i < g.first_inside + g.count_inside; ++i) diag += k.at(i, i).real();
  CHECK(trace_restricted(restrict_to_interval(L)) == Approx(g.h_x * diag).epsilon(1e-14));
  // int_0^alpha (1 + cos 2 pi x)/2 * sqrt(2 pi) dx for integer alpha.
  CHECK(trace_restricted(L) == Approx(4.0 * 0.5 * std::sqrt(2.0 * oracle::pi)).epsilon(1e-10));
}

TEST_CASE("padding sensitivity of restricted traces", "[quantize]") {
  const auto spec = make_symbol("cosine_gauss");
  auto tr = [&](double m) {
    GridConfig cfg;
    cfg.padding_m = m;
    const Grid g = Grid::make(4.0, cfg);
    const Spectrum s = eigh(hermitize(quantize(spec, g)), true);
    return trace_restricted_function(s, [](double x) { return x * x * x; });
  };
  CHECK(std::abs(tr(8.0) - tr(16.0)) <= 1e-10);
}
