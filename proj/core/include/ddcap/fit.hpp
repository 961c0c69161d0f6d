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

#include <cstddef>
#include <span>

namespace ddcap {

// Ordinary least squares y = intercept + slope * x with a two-sided
// Student-t confidence interval on the slope.
struct LineFit {
  double slope = 0;
  double intercept = 0;
  double slope_stderr = 0;
  double ci_low = 0;
  double ci_high = 0;
  double rss = 0;  // residual sum of squares
  std::size_t n = 0;
};

LineFit fit_line(std::span<const double> x, std::span<const double> y, double confidence = 0.95);

// Fit of log(y) against log(x); all values must be positive.
LineFit fit_loglog(std::span<const double> x, std::span<const double> y, double confidence = 0.95);

// y against log(x).
LineFit fit_semilog(std::span<const double> x, std::span<const double> y, double confidence = 0.95);

}  // namespace ddcap
