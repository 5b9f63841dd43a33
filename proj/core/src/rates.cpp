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

#include "statfem/rates.hpp"

#include <cmath>
#include <string>

#include "statfem/errors.hpp"

namespace statfem {

LineFit fit_loglog_slope(std::span<const double> hs, std::span<const double> ws) {
  if (hs.size() != ws.size()) throw InvalidArgument("fit_loglog_slope: size mismatch");
  if (hs.size() < 2) throw InvalidArgument("fit_loglog_slope: need at least two points");
  const double n = static_cast<double>(hs.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (!(ws[i] > 0.0) || !(hs[i] > 0.0)) {
      throw InvalidArgument("fit_loglog_slope: non-positive value at index " + std::to_string(i));
    }
    sx += std::log(hs[i]);
    sy += std::log(ws[i]);
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double dx = std::log(hs[i]) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(ws[i]) - my);
  }
  if (sxx == 0.0) throw InvalidArgument("fit_loglog_slope: all h values are equal");
  LineFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

double dyadic_log_ratio(double w_h_h2, double w_h2_h4) {
  if (!(w_h_h2 > 0.0) || !(w_h2_h4 > 0.0)) {
    throw InvalidArgument("dyadic_log_ratio: distances must be positive");
  }
  return std::log2(w_h_h2 / w_h2_h4);
}

double dyadic_log_ratio_from_levels(double e_h, double e_h2, double e_h4) {
  if (!(e_h > 0.0) || !(e_h2 > 0.0) || !(e_h4 > 0.0)) {
    throw InvalidArgument("dyadic_log_ratio_from_levels: distances must be positive");
  }
  return dyadic_log_ratio(e_h + e_h2, e_h2 + e_h4);
}

std::vector<double> smooth_lr(std::span<const double> hs, std::span<const double> ratios,
                              double cutoff_h) {
  if (hs.size() != ratios.size()) throw InvalidArgument("smooth_lr: size mismatch");
  for (std::size_t i = 1; i < hs.size(); ++i) {
    if (!(hs[i] < hs[i - 1])) throw InvalidArgument("smooth_lr: h values must be decreasing");
  }
  std::vector<double> out;
  double sum = 0.0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (hs[i] > cutoff_h) continue;
    if (!(ratios[i] > 0.0)) throw InvalidArgument("smooth_lr: ratios must be positive");
    sum += ratios[i];
    out.push_back(std::log2(sum / static_cast<double>(out.size() + 1)));
  }
  if (out.empty()) throw InvalidArgument("smooth_lr: no entries at or below the cutoff");
  return out;
}

}  // namespace statfem
