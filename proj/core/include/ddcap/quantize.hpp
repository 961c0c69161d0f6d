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
#include <string>

#include <Eigen/Dense>

#include "ddcap/grid.hpp"
#include "ddcap/symbols.hpp"

namespace ddcap {

enum class OperatorKind { quantized, projection, composite };

std::string to_string(OperatorKind kind);

// Dense matrix of an operator on the grid. Matrices carry the Nystrom weight
// h_x, so their eigenvalues approximate those of the continuous operator.
struct DiscreteOperator {
  Eigen::MatrixXcd matrix;
  Grid grid;
  OperatorKind kind = OperatorKind::composite;
  // Estimate of the operator norm of (A - A*)/2.
  double hermitian_defect = 0;

  std::size_t size() const { return static_cast<std::size_t>(matrix.rows()); }
};

enum class PointwiseMap {
  identity,           // sigma
  f_eps,              // f(sigma) for a real function f (smoothed rate, polynomial, ...)
  exp_i2pi_s,         // e(s sigma) = exp(i 2 pi s sigma)
  product_sigma_exp,  // sigma * e(s sigma)
};

// A symbol transformed sample-wise before quantization.
struct SymbolFunctionSpec {
  SymbolSpec base;
  PointwiseMap map = PointwiseMap::identity;
  double s = 0;                         // exp_i2pi_s, product_sigma_exp
  std::function<double(double)> f;      // f_eps

  std::complex<double> operator()(double x, double omega) const;
  bool is_real() const { return map == PointwiseMap::identity || map == PointwiseMap::f_eps; }
};

SymbolFunctionSpec identity_map(const SymbolSpec& base);

// Kohn-Nirenberg quantization on the grid: matrix(i, j) = h_x * k(x_i, x_j)
// with k the omega-quadrature kernel of the mapped symbol.
DiscreteOperator quantize(const SymbolFunctionSpec& sfs, const Grid& grid);
inline DiscreteOperator quantize(const SymbolSpec& spec, const Grid& grid) { return quantize(identity_map(spec), grid); }

// Multiplication by the indicator of [0, alpha).
DiscreteOperator projection(const Grid& grid);
DiscreteOperator identity_operator(const Grid& grid);

DiscreteOperator compose(const DiscreteOperator& a, const DiscreteOperator& b);
DiscreteOperator adjoint(const DiscreteOperator& a);
DiscreteOperator subtract(const DiscreteOperator& a, const DiscreteOperator& b);
// (A + A*)/2. The defect of the input is returned through input_defect.
DiscreteOperator hermitize(const DiscreteOperator& a, double* input_defect = nullptr);
// P A P as a full-size operator.
DiscreteOperator restrict_to_interval(const DiscreteOperator& a);
// The block of A on the interval nodes, count_inside square.
Eigen::MatrixXcd interval_block(const DiscreteOperator& a);

// Power-iteration estimate of ||(A - A*)/2||_op; exactly 0 for Hermitian A.
double estimate_hermitian_defect(const Eigen::MatrixXcd& a);

}  // namespace ddcap
