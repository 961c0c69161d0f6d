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

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ddcap/grid.hpp"
#include "ddcap/quantize.hpp"

namespace ddcap {

// Eigenvalues in descending order. When present, column k of basis is the
// unit eigenvector for values[k].
struct Spectrum {
  std::vector<double> values;
  std::optional<Eigen::MatrixXcd> basis;
  Grid grid;
  double input_trace = 0;

  double max() const { return values.empty() ? 0.0 : values.front(); }
  double min() const { return values.empty() ? 0.0 : values.back(); }
};

// Largest |A_ij - conj(A_ji)|.
double hermitian_deviation(const Eigen::MatrixXcd& a);

// Dense Hermitian eigensolver (Householder tridiagonalization and implicit
// QR; real arithmetic when the imaginary part is at round-off level).
// Throws PreconditionError when the input deviates from Hermitian by more than 1e-8.
Spectrum eigh(const DiscreteOperator& a, bool with_vectors = false);
Spectrum eigh(const Eigen::MatrixXcd& a, const Grid& grid, bool with_vectors = false);

// max_k ||A v_k - lambda_k v_k|| / ||A||_op.
double eigen_residual(const Eigen::MatrixXcd& a, const Spectrum& spectrum);

// Singular values in descending order; any shape.
std::vector<double> singular_values(const Eigen::MatrixXcd& a);

// Schatten norm for p = 1 (trace norm) or p = 2 (Hilbert-Schmidt).
double schatten_norm(const Eigen::MatrixXcd& a, int p);
double schatten_norm(const DiscreteOperator& a, int p);

// Sum of diagonal entries at nodes inside [0, alpha).
double trace_restricted(const Eigen::MatrixXcd& a, const Grid& grid);
double trace_restricted(const DiscreteOperator& a);

// V f(Lambda) V*. Throws DomainError when f is not finite at an eigenvalue.
DiscreteOperator apply_spectral_function(const DiscreteOperator& a, const std::function<double(double)>& f);

// tr_alpha f(A) = sum over interval nodes i of sum_k f(lambda_k) |V_ik|^2.
// Requires a spectrum with basis.
double trace_restricted_function(const Spectrum& spectrum, const std::function<double(double)>& f);

// Zeroes eigenvalues in [-tol, 0) with tol = tol_rel * max|lambda|. Values
// below -tol throw NumericalError when strict; otherwise they are kept.
// Returns the most negative eigenvalue seen before clipping.
double clip_negative(Spectrum& spectrum, bool strict, double tol_rel = 1e-10);

}  // namespace ddcap
