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

#include "statfem/posterior.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Cholesky>

#include "statfem/errors.hpp"
#include "statfem/random.hpp"

namespace statfem {
namespace {

constexpr double kGridMatchTol = 1e-12;

}  // namespace

void SensorSet::validate() const {
  if (locations.empty()) throw InvalidArgument("sensor set is empty");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw InvalidArgument("sensor noise must be positive, got " + std::to_string(epsilon));
  }
  for (std::size_t i = 0; i < locations.size(); ++i) {
    for (std::size_t j = i + 1; j < locations.size(); ++j) {
      if (locations[i] == locations[j]) {
        throw InvalidArgument("sensor locations " + std::to_string(i) + " and " +
                              std::to_string(j) + " coincide");
      }
    }
  }
  if (values && values->size() != size()) {
    throw InvalidArgument("sensor values have length " + std::to_string(values->size()) +
                          ", expected " + std::to_string(size()));
  }
}

std::vector<Point> equispaced_sensors_1d(int count, double lo, double hi) {
  if (count < 1) throw InvalidArgument("need at least one sensor");
  std::vector<Point> out(count);
  for (int i = 0; i < count; ++i) {
    out[i] = {count == 1 ? 0.5 * (lo + hi) : lo + (hi - lo) * i / (count - 1), 0.0};
  }
  return out;
}

std::vector<Point> equispaced_sensors_2d(int per_side, double lo, double hi) {
  const auto line = equispaced_sensors_1d(per_side, lo, hi);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(per_side) * per_side);
  for (int j = 0; j < per_side; ++j) {
    for (int i = 0; i < per_side; ++i) out.push_back({line[i].x, line[j].x});
  }
  return out;
}

Eigen::VectorXd generate_sensor_data(const SensorMoments& source, const SensorSet& sensors,
                                     std::uint64_t seed) {
  sensors.validate();
  const int s = sensors.size();
  if (source.mean.size() != s || source.cov.rows() != s) {
    throw InvalidArgument("sensor moments do not match the sensor set");
  }
  const auto root = sym_psd_sqrt(source.cov);
  const double trace = source.cov.trace();
  if (root.clamped_mass > 1e-8 * std::max(trace, 1e-300) && root.clamped_mass > 1e-14) {
    throw NumericalError("sensor covariance is not PSD (negative mass " +
                         std::to_string(root.clamped_mass) + ")");
  }
  NormalStream trajectory(seed, 0);
  NormalStream noise(seed, 1);
  const Eigen::VectorXd z = trajectory.vector(s);
  const Eigen::VectorXd xi = noise.vector(s);
  return source.mean + root.sqrt * z + sensors.epsilon * xi;
}

GaussianField condition(const GaussianField& prior, const SensorMoments& at_sensors,
                        const SensorSet& sensors) {
  sensors.validate();
  if (!sensors.values) throw InvalidArgument("conditioning needs sensor values");
  const int s = sensors.size();
  const int n = prior.size();
  if (at_sensors.mean.size() != s || at_sensors.cov.rows() != s || at_sensors.cross.rows() != n ||
      at_sensors.cross.cols() != s) {
    throw InvalidArgument("sensor moments do not match the prior and sensor set");
  }
  Eigen::MatrixXd b = at_sensors.cov;
  b.diagonal().array() += sensors.epsilon * sensors.epsilon;
  Eigen::LLT<Eigen::MatrixXd> llt(b);
  if (llt.info() != Eigen::Success) {
    throw ConditioningError("innovation covariance is not positive definite (eps = " +
                            std::to_string(sensors.epsilon) + ")");
  }
  const Eigen::VectorXd innovation = *sensors.values - at_sensors.mean;
  // x = L^{-1} K^T, so K B^{-1} K^T = x^T x.
  const Eigen::MatrixXd x = llt.matrixL().solve(at_sensors.cross.transpose());
  const Eigen::VectorXd y = llt.matrixL().solve(innovation);

  GaussianField post;
  post.grid = prior.grid;
  post.mean = prior.mean + x.transpose() * y;
  post.cov = prior.cov;
  post.cov.noalias() -= x.transpose() * x;
  post.cov = 0.5 * (post.cov + post.cov.transpose()).eval();
  return post;
}

GaussianField condition(const GaussianField& prior, const SensorSet& sensors) {
  sensors.validate();
  const auto& pts = prior.grid->points;
  std::vector<int> index;
  for (const auto& loc : sensors.locations) {
    auto it = std::find_if(pts.begin(), pts.end(), [&loc](const Point& p) {
      return squared_distance(p, loc) <= kGridMatchTol * kGridMatchTol;
    });
    if (it == pts.end()) {
      throw LocationError("sensor at (" + std::to_string(loc.x) + ", " + std::to_string(loc.y) +
                          ") is not a grid point and the prior has no cross covariances");
    }
    index.push_back(static_cast<int>(it - pts.begin()));
  }
  SensorMoments m;
  const int s = static_cast<int>(index.size());
  m.mean.resize(s);
  m.cov.resize(s, s);
  m.cross.resize(prior.size(), s);
  for (int j = 0; j < s; ++j) {
    m.mean[j] = prior.mean[index[j]];
    m.cross.col(j) = prior.cov.col(index[j]);
    for (int i = 0; i < s; ++i) m.cov(i, j) = prior.cov(index[i], index[j]);
  }
  return condition(prior, m, sensors);
}

UnivariateGaussian pushforward_linear_functional(const GaussianField& field,
                                                 const Eigen::VectorXd& weights) {
  if (weights.size() != field.size()) throw InvalidArgument("functional weights size mismatch");
  return {weights.dot(field.mean), std::max(0.0, weights.dot(field.cov * weights))};
}

}  // namespace statfem
