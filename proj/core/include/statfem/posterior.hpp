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

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "statfem/gaussian_field.hpp"
#include "statfem/metrics.hpp"

namespace statfem {

// Point sensors v = u(y_j) + eps * xi_j, xi ~ N(0, I).
struct SensorSet {
  std::vector<Point> locations;
  double epsilon = 1e-2;
  std::optional<Eigen::VectorXd> values;

  int size() const { return static_cast<int>(locations.size()); }
  // Throws InvalidArgument unless s >= 1, eps > 0 and locations are distinct.
  void validate() const;
};

// s points equispaced on [lo, hi].
std::vector<Point> equispaced_sensors_1d(int count, double lo, double hi);
// per_side^2 points on the tensor grid [lo, hi]^2, x fastest.
std::vector<Point> equispaced_sensors_2d(int per_side, double lo, double hi);

// One draw of u at the sensors (stream 0 of the seed) plus eps times a
// standard normal vector (stream 1). The same seed gives the same u and the
// same unit noise for every eps.
Eigen::VectorXd generate_sensor_data(const SensorMoments& source, const SensorSet& sensors,
                                     std::uint64_t seed);

// Gaussian conditioning of the grid field on the sensor values:
//   m_post = m + K B^{-1} (v - m_s),  C_post = C - K B^{-1} K^T,
//   B = eps^2 I + C_s,  K = cross covariance grid x sensors.
GaussianField condition(const GaussianField& prior, const SensorMoments& at_sensors,
                        const SensorSet& sensors);

// Same, for sensors placed exactly on grid points. Throws LocationError for
// any sensor that is not a grid point.
GaussianField condition(const GaussianField& prior, const SensorSet& sensors);

// Law of sum_k weights_k u(x_k).
UnivariateGaussian pushforward_linear_functional(const GaussianField& field,
                                                 const Eigen::VectorXd& weights);

}  // namespace statfem
