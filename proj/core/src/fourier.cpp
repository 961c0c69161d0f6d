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

#include "fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <mutex>

#include "ddcap/errors.hpp"

namespace ddcap::detail {

namespace {
// The FFTW planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RowTransform::RowTransform(const Grid& grid) : grid_(grid), n_(grid.dft_length) {
  if (n_ == 0) throw PreconditionError("grid has no DFT length");
  std::lock_guard lock(planner_mutex());
  in_ = reinterpret_cast<cd*>(fftw_malloc(sizeof(fftw_complex) * n_));
  out_ = reinterpret_cast<cd*>(fftw_malloc(sizeof(fftw_complex) * n_));
  auto* in = reinterpret_cast<fftw_complex*>(in_);
  auto* out = reinterpret_cast<fftw_complex*>(out_);
  const int n = static_cast<int>(n_);
  forward_ = fftw_plan_dft_1d(n, in, out, FFTW_FORWARD, FFTW_ESTIMATE);
  backward_ = fftw_plan_dft_1d(n, in, out, FFTW_BACKWARD, FFTW_ESTIMATE);
}

RowTransform::~RowTransform() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_));
  fftw_destroy_plan(static_cast<fftw_plan>(backward_));
  fftw_free(in_);
  fftw_free(out_);
}

std::size_t RowTransform::bin_of(std::size_t m) const {
  const long n = static_cast<long>(n_);
  long b = grid_.omega_index(m) % n;
  if (b < 0) b += n;
  return static_cast<std::size_t>(b);
}

std::span<const cd> RowTransform::kernel_from_samples(std::span<const cd> samples) {
  std::fill(in_, in_ + n_, cd{});
  for (std::size_t m = 0; m < samples.size(); ++m) {
    in_[bin_of(m)] += grid_.omega_weight(m) * samples[m];
  }
  fftw_execute(static_cast<fftw_plan>(forward_));
  return {out_, n_};
}

std::span<const cd> RowTransform::symbol_from_offsets(std::span<const cd> offsets) {
  std::copy(offsets.begin(), offsets.end(), in_);
  fftw_execute(static_cast<fftw_plan>(backward_));
  for (std::size_t b = 0; b < n_; ++b) out_[b] *= grid_.h_x;
  return {out_, n_};
}

}  // namespace ddcap::detail
