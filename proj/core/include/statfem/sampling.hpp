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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "statfem/gaussian_field.hpp"

namespace statfem {

// n_samples x N trajectories on a reference grid.
struct SampleBatch {
  Eigen::MatrixXd trajectories;
  std::uint64_t seed = 0;
  std::string source;
};

// Symmetric factor F with F F^T equal to the clamped PSD part of cov.
Eigen::MatrixXd sampling_factor(const Eigen::MatrixXd& cov);

// Trajectory j is mean + F z_j with z_j drawn from NormalStream(seed, j), so
// every trajectory is reproducible on its own.
SampleBatch sample_field(const GaussianField& field, int n_samples, std::uint64_t seed,
                         std::string source = {});

// Per-trajectory maximum over the grid.
std::vector<double> max_functional(const SampleBatch& batch);

}  // namespace statfem
