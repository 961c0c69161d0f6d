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

#include "ddcap/quantize.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "ddcap/errors.hpp"
#include "fourier.hpp"

namespace ddcap {

using cd = std::complex<double>;

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::quantized: return "quantized";
    case OperatorKind::projection: return "projection";
    case OperatorKind::composite: return "composite";
  }
  return "unknown";
}

cd SymbolFunctionSpec::operator()(double x, double omega) const {
  const double v = eval_symbol(base, x, omega);
  switch (map) {
    case PointwiseMap::identity: return v;
    case PointwiseMap::f_eps:
      if (!f) throw PreconditionError("f_eps map without a function");
      return f(v);
    case PointwiseMap::exp_i2pi_s: return std::polar(1.0, 2.0 * std::numbers::pi * s * v);
    case PointwiseMap::product_sigma_exp: return v * std::polar(1.0, 2.0 * std::numbers::pi * s * v);
  }
  return 0.0;
}

SymbolFunctionSpec identity_map(const SymbolSpec& base) {
  SymbolFunctionSpec sfs;
  sfs.base = base;
  return sfs;
}

double estimate_hermitian_defect(const Eigen::MatrixXcd& a) {
  const Eigen::MatrixXcd h = 0.5 * (a - a.adjoint());
  const double top = h.cwiseAbs().maxCoeff();
  if (top == 0.0) return 0.0;
  const auto n = h.rows();
  Eigen::VectorXcd v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = cd(1.0 + 0.5 * std::sin(0.7 * static_cast<double>(i)), 0.0);
  v.normalize();
  double est = 0;
  for (int it = 0; it < 200; ++it) {
    Eigen::VectorXcd w = h * v;
    const double nw = w.norm();
    if (nw == 0.0) return est;
    const bool done = std::abs(nw - est) <= 1e-10 * nw;
    est = nw;
    v = w / nw;
    if (done) break;
  }
  return est;
}

namespace {

DiscreteOperator make_op(Eigen::MatrixXcd m, const Grid& g, OperatorKind kind) {
  DiscreteOperator op;
  op.hermitian_defect = estimate_hermitian_defect(m);
  op.matrix = std::move(m);
  op.grid = g;
  op.kind = kind;
  return op;
}

void require_same_grid(const DiscreteOperator& a, const DiscreteOperator& b, const char* what) {
  if (!(a.grid == b.grid) || a.matrix.rows() != b.matrix.rows() || a.matrix.cols() != b.matrix.cols()) {
    throw PreconditionError(std::string(what) + ": operands live on different grids (dimension mismatch)");
  }
}

}  // namespace

DiscreteOperator quantize(const SymbolFunctionSpec& sfs, const Grid& grid) {
  if (2.0 * grid.h_x * grid.omega_max > 1.0 + 1e-12) {
    throw AliasingError("grid too coarse for omega_max", "grid");
  }
  const std::size_t n = grid.n_x;
  const long len = static_cast<long>(grid.dft_length);
  Eigen::MatrixXcd m(n, n);
  detail::RowTransform tr(grid);
  std::vector<cd> samples(grid.n_omega);

  const auto fill_row = [&](std::size_t i, std::span<const cd> row) {
    for (std::size_t j = 0; j < n; ++j) {
      long d = (static_cast<long>(i) - static_cast<long>(j)) % len;
      if (d < 0) d += len;
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = grid.h_x * row[static_cast<std::size_t>(d)];
    }
  };

  if (sfs.base.time_invariant) {
    for (std::size_t k = 0; k < grid.n_omega; ++k) samples[k] = sfs(grid.x(0), grid.omega(k));
    const auto row = tr.kernel_from_samples(samples);
    for (std::size_t i = 0; i < n; ++i) fill_row(i, row);
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      const double x = grid.x(i);
      for (std::size_t k = 0; k < grid.n_omega; ++k) samples[k] = sfs(x, grid.omega(k));
      fill_row(i, tr.kernel_from_samples(samples));
    }
  }
  return make_op(std::move(m), grid, OperatorKind::quantized);
}

DiscreteOperator projection(const Grid& grid) {
  Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(grid.n_x);
  for (std::size_t i = 0; i < grid.n_x; ++i) {
    if (grid.inside(i)) diag(static_cast<Eigen::Index>(i)) = 1.0;
  }
  DiscreteOperator op;
  op.matrix = diag.asDiagonal();
  op.grid = grid;
  op.kind = OperatorKind::projection;
  return op;
}

DiscreteOperator identity_operator(const Grid& grid) {
  DiscreteOperator op;
  op.matrix = Eigen::MatrixXcd::Identity(grid.n_x, grid.n_x);
  op.grid = grid;
  op.kind = OperatorKind::composite;
  return op;
}

DiscreteOperator compose(const DiscreteOperator& a, const DiscreteOperator& b) {
  require_same_grid(a, b, "compose");
  Eigen::MatrixXcd m;
  if (b.kind == OperatorKind::projection) {
    // Right multiplication by a 0/1 diagonal only masks columns.
    m = a.matrix;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!b.grid.inside(static_cast<std::size_t>(j))) m.col(j).setZero();
    }
  } else if (a.kind == OperatorKind::projection) {
    m = b.matrix;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (!a.grid.inside(static_cast<std::size_t>(i))) m.row(i).setZero();
    }
  } else {
    m.noalias() = a.matrix * b.matrix;
  }
  const OperatorKind kind =
      a.kind == OperatorKind::projection && b.kind == OperatorKind::projection ? OperatorKind::projection
                                                                               : OperatorKind::composite;
  return make_op(std::move(m), a.grid, kind);
}

DiscreteOperator adjoint(const DiscreteOperator& a) {
  DiscreteOperator op = a;
  op.matrix = a.matrix.adjoint();
  if (a.kind == OperatorKind::quantized) op.kind = OperatorKind::composite;
  return op;
}

DiscreteOperator subtract(const DiscreteOperator& a, const DiscreteOperator& b) {
  require_same_grid(a, b, "subtract");
  return make_op(a.matrix - b.matrix, a.grid, OperatorKind::composite);
}

DiscreteOperator hermitize(const DiscreteOperator& a, double* input_defect) {
  if (a.matrix.rows() != a.matrix.cols()) throw PreconditionError("hermitize: matrix is not square");
  if (input_defect) *input_defect = a.hermitian_defect;
  DiscreteOperator op;
  op.matrix = 0.5 * (a.matrix + a.matrix.adjoint());
  op.grid = a.grid;
  op.kind = a.kind;
  op.hermitian_defect = estimate_hermitian_defect(op.matrix);
  return op;
}

DiscreteOperator restrict_to_interval(const DiscreteOperator& a) {
  DiscreteOperator op = a;
  for (Eigen::Index i = 0; i < op.matrix.rows(); ++i) {
    if (!a.grid.inside(static_cast<std::size_t>(i))) {
      op.matrix.row(i).setZero();
      op.matrix.col(i).setZero();
    }
  }
  op.kind = a.kind == OperatorKind::projection ? OperatorKind::projection : OperatorKind::composite;
  op.hermitian_defect = estimate_hermitian_defect(op.matrix);
  return op;
}

Eigen::MatrixXcd interval_block(const DiscreteOperator& a) {
  const auto first = static_cast<Eigen::Index>(a.grid.first_inside);
  const auto count = static_cast<Eigen::Index>(a.grid.count_inside);
  return a.matrix.block(first, first, count, count);
}

}  // namespace ddcap
