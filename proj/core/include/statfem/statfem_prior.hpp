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

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "statfem/fem.hpp"
#include "statfem/forcing.hpp"
#include "statfem/gaussian_field.hpp"

namespace statfem {

enum class KfMode {
  // Element-pair quadrature of phi_i(x) k(x, y) phi_j(y).
  exact_quadrature,
  // M C M^T with C the kernel at all mesh nodes.
  nodal_mass,
};

std::string_view to_string(KfMode mode);
// exact_quadrature in 1D, nodal_mass in 2D.
KfMode default_kf_mode(int dim);

// Covariance of the random load vector.
struct ForcingCovarianceMatrix {
  Eigen::MatrixXd matrix;
  KfMode mode = KfMode::exact_quadrature;
};

ForcingCovarianceMatrix assemble_forcing_covariance(const FemSystem& fem, const ForcingModel& model,
                                                    KfMode mode);

struct PointMoments {
  Eigen::VectorXd mean;
  Eigen::MatrixXd cov;
};

// Mean P A^{-1} f_bar and covariance (P A^{-1}) K_F (P A^{-1})^T at arbitrary
// points of the closed domain.
PointMoments statfem_moments(const FemSystem& fem, const ForcingCovarianceMatrix& kf,
                             const ForcingModel& model, std::span<const Point> points);

GaussianField statfem_prior_on_grid(const FemSystem& fem, const ForcingCovarianceMatrix& kf,
                                    const ForcingModel& model, GridPtr grid);

PriorWithSensors statfem_prior_with_sensors(const FemSystem& fem, const ForcingCovarianceMatrix& kf,
                                            const ForcingModel& model, GridPtr grid,
                                            const std::vector<Point>& sensors);

}  // namespace statfem
