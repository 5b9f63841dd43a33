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

#include <Eigen/Dense>

#include "statfem/gaussian_field.hpp"

namespace statfem {

struct PsdSqrtResult {
  Eigen::MatrixXd sqrt;
  // Sum of the magnitudes of the negative eigenvalues that were dropped.
  double clamped_mass = 0.0;
  // Eigenvalues after clamping, ascending.
  Eigen::VectorXd eigenvalues;
};

// Symmetric square root of the PSD part of C. Eigenvalues below
// tol * lambda_max are set to zero. Throws InvalidArgument when C is not
// symmetric to 1e-10 relative.
PsdSqrtResult sym_psd_sqrt(const Eigen::MatrixXd& c, double tol = 1e-12);

// A Gaussian in the weighted coordinates m~ = W^{1/2} m, S~ = (W^{1/2} C W^{1/2})^{1/2},
// ready for repeated distance evaluations.
struct PreparedGaussian {
  GridPtr grid;
  Eigen::VectorXd mean;
  Eigen::MatrixXd sqrt_cov;
  double trace = 0.0;
};

PreparedGaussian prepare_gaussian(const GaussianField& field);

// Unweighted Gaussian W2 in R^n.
double wasserstein2_gaussian(const Eigen::VectorXd& m1, const Eigen::MatrixXd& c1,
                             const Eigen::VectorXd& m2, const Eigen::MatrixXd& c2);

double wasserstein2_prepared(const PreparedGaussian& a, const PreparedGaussian& b);

// W2 between grid-restricted fields in the trapezoid-weighted L2 geometry.
// Throws IncompatibleFieldsError when the grids differ.
double wasserstein2_gaussian_fields(const GaussianField& a, const GaussianField& b);

struct UnivariateGaussian {
  double mean = 0.0;
  double variance = 0.0;
};

double wasserstein2_univariate_gaussian(const UnivariateGaussian& a, const UnivariateGaussian& b);

// Exact W2 between two equal-size empirical measures on the line.
double wasserstein2_empirical_1d(std::span<const double> xs, std::span<const double> ys);

}  // namespace statfem
