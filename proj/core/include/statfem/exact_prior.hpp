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
#include <vector>

#include "statfem/forcing.hpp"
#include "statfem/gaussian_field.hpp"
#include "statfem/statfem_prior.hpp"

namespace statfem {

// Green's function of -u'' = f on [0,1] with u(0) = u(1) = 0.
double greens_eval(double x, double y);

struct ExactPriorOptions {
  double rel_tol = 1e-8;
  int max_refinements = 12;
  int gauss_points = 8;
};

// Mean and covariance of the exact 1D solution at the given points:
//   mean(x)   = int G(x,w) f_bar(w) dw
//   cov(x,y)  = int int G(x,w) k(w,t) G(t,y) dt dw
// by composite Gauss-Legendre on panels that break at every evaluation point,
// halving the panels until the relative change drops below rel_tol.
PointMoments exact_moments(const ForcingModel& model, std::span<const Point> points,
                           const ExactPriorOptions& options = {});

GaussianField exact_prior_on_grid(const ForcingModel& model, GridPtr grid,
                                  const ExactPriorOptions& options = {});

PriorWithSensors exact_prior_with_sensors(const ForcingModel& model, GridPtr grid,
                                          const std::vector<Point>& sensors,
                                          const ExactPriorOptions& options = {});

}  // namespace statfem
