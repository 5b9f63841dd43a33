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

#include "statfem/geometry.hpp"

namespace statfem {

// Gaussian-process forcing: mean f_bar and the squared-exponential kernel
// sigma_f^2 exp(-|x - y|^2 / (2 l_f^2)).
struct ForcingModel {
  double sigma_f = 0.1;
  double length_scale = 0.4;
  // Used when mean_function is empty.
  double mean_value = 1.0;
  ScalarField mean_function;

  double mean(const Point& p) const { return mean_function ? mean_function(p) : mean_value; }
  bool has_constant_mean() const { return !mean_function; }

  // Throws InvalidArgument unless sigma_f >= 0 and length_scale > 0.
  void validate() const;
};

double kernel_eval(const ForcingModel& model, const Point& x, const Point& y);

// C_ab = k(a_i, b_j).
Eigen::MatrixXd kernel_matrix(const ForcingModel& model, std::span<const Point> a,
                              std::span<const Point> b);

}  // namespace statfem
