// Copyright 2026 The statfem-lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace statfem {

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

// OLS fit of ln w against ln h. Throws InvalidArgument for fewer than two
// points, mismatched sizes or any w <= 0.
LineFit fit_loglog_slope(std::span<const double> hs, std::span<const double> ws);

// log2(W(h, h/2) / W(h/2, h/4)) from the two self-distances.
double dyadic_log_ratio(double w_h_h2, double w_h2_h4);

// Same estimate from per-level errors e(h), e(h/2), e(h/4) against a common
// reference, taking W(a, b) = e(a) + e(b).
double dyadic_log_ratio_from_levels(double e_h, double e_h2, double e_h4);

// Drops entries with h > cutoff_h, takes the running mean of the remaining
// ratios from the largest h down, and returns log2 of each running mean.
// hs must be in decreasing order.
std::vector<double> smooth_lr(std::span<const double> hs, std::span<const double> ratios,
                              double cutoff_h);

struct LrPoint {
  double h = 0.0;
  double ratio = 0.0;
  double lr = 0.0;
  double smoothed = 0.0;  // NaN above the cutoff
};

struct RateReport {
  std::string experiment;
  std::optional<double> epsilon;
  std::vector<double> h_values;  // decreasing
  std::vector<double> distances;
  LineFit fit;
  std::vector<LrPoint> lr_sequence;
  std::optional<double> final_smoothed_lr;
};

}  // namespace statfem
