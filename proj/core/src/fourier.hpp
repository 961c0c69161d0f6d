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
#include <cstddef>
#include <span>
#include <vector>

#include "ddcap/grid.hpp"

namespace ddcap::detail {

using cd = std::complex<double>;

// Plans and buffers for the per-row transform between symbol samples on the
// frequency axis and kernel values at grid offsets. Not thread-safe; use one
// instance per thread.
class RowTransform {
 public:
  explicit RowTransform(const Grid& grid);
  ~RowTransform();
  RowTransform(const RowTransform&) = delete;
  RowTransform& operator=(const RowTransform&) = delete;

  // samples[m] = sigma(x, omega_m), m = 0..n_omega-1. Returns k(x, x - d*h_x)
  // for d = 0..N-1 (mod N), trapezoid-weighted.
  std::span<const cd> kernel_from_samples(std::span<const cd> samples);

  // offsets[d] = k(x, x - d*h_x). Returns sigma at frequency index b*h_omega
  // for every DFT bin b = 0..N-1 (bin b holds index b, or b - N above N/2).
  std::span<const cd> symbol_from_offsets(std::span<const cd> offsets);

  std::size_t length() const { return n_; }
  // DFT bin of frequency node m.
  std::size_t bin_of(std::size_t m) const;

 private:
  const Grid grid_;
  std::size_t n_;
  cd* in_;
  cd* out_;
  void* forward_;
  void* backward_;
};

}  // namespace ddcap::detail
