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

#include "statfem/forcing.hpp"

#include <cmath>
#include <string>

#include "statfem/errors.hpp"

namespace statfem {

void ForcingModel::validate() const {
  if (!(sigma_f >= 0.0) || !std::isfinite(sigma_f)) {
    throw InvalidArgument("sigma_f must be finite and non-negative, got " + std::to_string(sigma_f));
  }
  if (!(length_scale > 0.0) || !std::isfinite(length_scale)) {
    throw InvalidArgument("length scale must be finite and positive, got " +
                          std::to_string(length_scale));
  }
}

double kernel_eval(const ForcingModel& model, const Point& x, const Point& y) {
  const double l = model.length_scale;
  return model.sigma_f * model.sigma_f * std::exp(-squared_distance(x, y) / (2.0 * l * l));
}

Eigen::MatrixXd kernel_matrix(const ForcingModel& model, std::span<const Point> a,
                              std::span<const Point> b) {
  const double s2 = model.sigma_f * model.sigma_f;
  const double scale = -1.0 / (2.0 * model.length_scale * model.length_scale);
  Eigen::MatrixXd c(a.size(), b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      c(i, j) = s2 * std::exp(scale * squared_distance(a[i], b[j]));
    }
  }
  return c;
}

}  // namespace statfem
