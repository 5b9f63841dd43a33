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

#include "statfem/gaussian_field.hpp"

#include <string>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

Eigen::VectorXd trapezoid_weights(int n) {
  Eigen::VectorXd w = Eigen::VectorXd::Constant(n, 1.0 / (n - 1));
  w[0] *= 0.5;
  w[n - 1] *= 0.5;
  return w;
}

}  // namespace

GridPtr uniform_grid_1d(int n_points) {
  if (n_points < 2) {
    throw InvalidArgument("uniform_grid_1d: need at least 2 points, got " + std::to_string(n_points));
  }
  auto grid = std::make_shared<ReferenceGrid>();
  grid->dim = 1;
  grid->points.resize(n_points);
  for (int i = 0; i < n_points; ++i) grid->points[i] = {static_cast<double>(i) / (n_points - 1), 0.0};
  grid->weights = trapezoid_weights(n_points);
  return grid;
}

GridPtr uniform_grid_2d(int n_per_side) {
  if (n_per_side < 2) {
    throw InvalidArgument("uniform_grid_2d: need at least 2 points per side, got " +
                          std::to_string(n_per_side));
  }
  const int n = n_per_side;
  const Eigen::VectorXd w1 = trapezoid_weights(n);
  auto grid = std::make_shared<ReferenceGrid>();
  grid->dim = 2;
  grid->points.resize(static_cast<std::size_t>(n) * n);
  grid->weights.resize(n * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      grid->points[i + j * n] = {static_cast<double>(i) / (n - 1), static_cast<double>(j) / (n - 1)};
      grid->weights[i + j * n] = w1[i] * w1[j];
    }
  }
  return grid;
}

bool same_grid(const ReferenceGrid& a, const ReferenceGrid& b) {
  if (&a == &b) return true;
  return a.dim == b.dim && a.points == b.points && a.weights.size() == b.weights.size() &&
         a.weights == b.weights;
}

PriorWithSensors split_joint(GridPtr grid, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov) {
  const int n = grid->size();
  const int s = static_cast<int>(mean.size()) - n;
  if (s < 0 || cov.rows() != mean.size() || cov.cols() != mean.size()) {
    throw InvalidArgument("split_joint: moment sizes do not match the grid");
  }
  PriorWithSensors out;
  out.field.grid = std::move(grid);
  out.field.mean = mean.head(n);
  out.field.cov = cov.topLeftCorner(n, n);
  out.at_sensors.mean = mean.tail(s);
  out.at_sensors.cov = cov.bottomRightCorner(s, s);
  out.at_sensors.cross = cov.topRightCorner(n, s);
  return out;
}

std::vector<Point> augmented_points(const ReferenceGrid& grid, const std::vector<Point>& sensors) {
  std::vector<Point> pts = grid.points;
  pts.insert(pts.end(), sensors.begin(), sensors.end());
  return pts;
}

}  // namespace statfem
