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

#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "statfem/geometry.hpp"

namespace statfem {

// Points at which fields are restricted, with trapezoidal weights that turn
// the grid inner product into an approximation of the L2(D) one.
struct ReferenceGrid {
  int dim = 1;
  std::vector<Point> points;
  Eigen::VectorXd weights;

  int size() const { return static_cast<int>(points.size()); }
};

using GridPtr = std::shared_ptr<const ReferenceGrid>;

// N equispaced points on [0,1], N >= 2.
GridPtr uniform_grid_1d(int n_points);

// n x n tensor grid on [0,1]^2, point (i, j) stored at i + j n.
GridPtr uniform_grid_2d(int n_per_side);

// Same points and weights (shared pointers compare equal trivially).
bool same_grid(const ReferenceGrid& a, const ReferenceGrid& b);

// Gaussian measure restricted to a reference grid.
struct GaussianField {
  GridPtr grid;
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;

  int size() const { return static_cast<int>(mean.size()); }
};

// Moments of a prior at sensor locations, plus cross covariances
// cross(k, j) = Cov(u(grid_k), u(sensor_j)).
struct SensorMoments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
  Eigen::MatrixXd cross;
};

struct PriorWithSensors {
  GaussianField field;
  SensorMoments at_sensors;
};

// Splits joint moments over grid-then-sensor points into the two parts.
PriorWithSensors split_joint(GridPtr grid, const Eigen::VectorXd& mean, const Eigen::MatrixXd& cov);

// Grid points followed by sensor points.
std::vector<Point> augmented_points(const ReferenceGrid& grid, const std::vector<Point>& sensors);

}  // namespace statfem
