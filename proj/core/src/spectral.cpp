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

#include "ddcap/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "ddcap/errors.hpp"

namespace ddcap {

namespace {

constexpr double kHermitianTol = 1e-8;

// Imaginary parts at round-off level (FFT noise on a real kernel) are dropped.
bool purely_real(const Eigen::MatrixXcd& a) {
  const double scale = a.cwiseAbs().maxCoeff();
  return a.imag().cwiseAbs().maxCoeff() <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
}

template <class Solver>
void check_solver(const Solver& solver, const char* what) {
  if (solver.info() != Eigen::Success) throw NumericalError(std::string(what) + " did not converge");
}

// Eigen's implicit QR can stall when most eigenvalues sit at zero (band
// limited Toeplitz blocks at large n). A shift by the infinity norm moves
// the cluster away from zero and leaves the vectors unchanged.
template <class Matrix>
void solve_hermitian(const Matrix& a, int options, Eigen::VectorXd& values, Matrix* vectors) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a, options);
  double shift = 0;
  if (es.info() == Eigen::NoConvergence) {
    shift = a.cwiseAbs().rowwise().sum().maxCoeff();
    es.compute(a + shift * Matrix::Identity(a.rows(), a.cols()), options);
  }
  check_solver(es, "eigh");
  values = es.eigenvalues().array() - shift;
  if (vectors) *vectors = es.eigenvectors().rowwise().reverse();
}

}  // namespace

double hermitian_deviation(const Eigen::MatrixXcd& a) {
  if (a.rows() != a.cols()) return std::numeric_limits<double>::infinity();
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

Spectrum eigh(const DiscreteOperator& a, bool with_vectors) {
  if (a.hermitian_defect > kHermitianTol) {
    throw PreconditionError("eigh: operator is not Hermitian (defect " + std::to_string(a.hermitian_defect) +
                            "); hermitize it first");
  }
  return eigh(a.matrix, a.grid, with_vectors);
}

Spectrum eigh(const Eigen::MatrixXcd& a, const Grid& grid, bool with_vectors) {
  if (a.rows() != a.cols()) throw PreconditionError("eigh: matrix is not square");
  if (hermitian_deviation(a) > kHermitianTol) throw PreconditionError("eigh: matrix is not Hermitian");
  const Eigen::Index n = a.rows();
  Spectrum out;
  out.grid = grid;
  out.input_trace = a.trace().real();
  if (n == 0) return out;

  const int options = with_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly;
  Eigen::VectorXd w;
  if (purely_real(a)) {
    Eigen::MatrixXd v;
    solve_hermitian<Eigen::MatrixXd>(a.real(), options, w, with_vectors ? &v : nullptr);
    if (with_vectors) out.basis = v.cast<std::complex<double>>();
  } else {
    Eigen::MatrixXcd v;
    solve_hermitian<Eigen::MatrixXcd>(a, options, w, with_vectors ? &v : nullptr);
    if (with_vectors) out.basis = std::move(v);
  }
  out.values.assign(w.data(), w.data() + n);
  std::reverse(out.values.begin(), out.values.end());
  return out;
}

double eigen_residual(const Eigen::MatrixXcd& a, const Spectrum& spectrum) {
  if (!spectrum.basis) throw PreconditionError("eigen_residual: spectrum has no basis");
  const auto& v = *spectrum.basis;
  double scale = 0;
  for (double l : spectrum.values) scale = std::max(scale, std::abs(l));
  if (scale == 0) scale = 1;
  double worst = 0;
  for (Eigen::Index k = 0; k < v.cols(); ++k) {
    const Eigen::VectorXcd r = a * v.col(k) - spectrum.values[static_cast<std::size_t>(k)] * v.col(k);
    worst = std::max(worst, r.norm());
  }
  return worst / scale;
}

std::vector<double> singular_values(const Eigen::MatrixXcd& a) {
  const Eigen::Index k = std::min(a.rows(), a.cols());
  if (k == 0) return {};
  Eigen::VectorXd s;
  if (purely_real(a)) {
    const Eigen::BDCSVD<Eigen::MatrixXd> svd(a.real());
    check_solver(svd, "singular_values");
    s = svd.singularValues();
  } else {
    const Eigen::BDCSVD<Eigen::MatrixXcd> svd(a);
    check_solver(svd, "singular_values");
    s = svd.singularValues();
  }
  return {s.data(), s.data() + s.size()};
}

double schatten_norm(const Eigen::MatrixXcd& a, int p) {
  if (p == 2) return a.norm();
  if (p != 1) throw DomainError("schatten_norm: only p = 1 and p = 2 are supported");
  double sum = 0;
  for (double s : singular_values(a)) sum += s;
  return sum;
}

double schatten_norm(const DiscreteOperator& a, int p) { return schatten_norm(a.matrix, p); }

double trace_restricted(const Eigen::MatrixXcd& a, const Grid& grid) {
  if (static_cast<std::size_t>(a.rows()) != grid.n_x || a.rows() != a.cols()) {
    throw PreconditionError("trace_restricted: matrix does not match the grid");
  }
  double t = 0;
  for (std::size_t i = grid.first_inside; i < grid.first_inside + grid.count_inside; ++i) {
    t += a(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)).real();
  }
  return t;
}

double trace_restricted(const DiscreteOperator& a) { return trace_restricted(a.matrix, a.grid); }

DiscreteOperator apply_spectral_function(const DiscreteOperator& a, const std::function<double(double)>& f) {
  const Spectrum sp = eigh(a, true);
  Eigen::VectorXd fl(static_cast<Eigen::Index>(sp.values.size()));
  for (std::size_t k = 0; k < sp.values.size(); ++k) {
    const double v = f(sp.values[k]);
    if (!std::isfinite(v)) {
      throw DomainError("apply_spectral_function: f is undefined at eigenvalue " + std::to_string(sp.values[k]));
    }
    fl(static_cast<Eigen::Index>(k)) = v;
  }
  const Eigen::MatrixXcd& v = *sp.basis;
  DiscreteOperator out;
  out.matrix = v * fl.asDiagonal() * v.adjoint();
  out.matrix = 0.5 * (out.matrix + out.matrix.adjoint()).eval();
  out.grid = a.grid;
  out.kind = OperatorKind::composite;
  out.hermitian_defect = 0;
  return out;
}

double trace_restricted_function(const Spectrum& spectrum, const std::function<double(double)>& f) {
  if (!spectrum.basis) throw PreconditionError("trace_restricted_function: spectrum has no basis");
  const auto& v = *spectrum.basis;
  const Grid& g = spectrum.grid;
  if (static_cast<std::size_t>(v.rows()) != g.n_x) throw PreconditionError("trace_restricted_function: grid mismatch");
  double t = 0;
  for (std::size_t k = 0; k < spectrum.values.size(); ++k) {
    const double fk = f(spectrum.values[k]);
    if (fk == 0.0) continue;
    if (!std::isfinite(fk)) throw DomainError("trace_restricted_function: f is undefined at an eigenvalue");
    const auto col = v.col(static_cast<Eigen::Index>(k))
                         .segment(static_cast<Eigen::Index>(g.first_inside), static_cast<Eigen::Index>(g.count_inside));
    t += fk * col.squaredNorm();
  }
  return t;
}

double clip_negative(Spectrum& spectrum, bool strict, double tol_rel) {
  double scale = 0;
  for (double l : spectrum.values) scale = std::max(scale, std::abs(l));
  const double tol = tol_rel * scale;
  const double lowest = spectrum.values.empty() ? 0.0 : spectrum.values.back();
  for (double& l : spectrum.values) {
    if (l >= 0) continue;
    if (l >= -tol) {
      l = 0;
    } else if (strict) {
      throw NumericalError("spectrum has eigenvalue " + std::to_string(l) + " below -tol_neg = " + std::to_string(-tol));
    }
  }
  return lowest;
}

}  // namespace ddcap
