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

#include <array>
#include <vector>

#include "statfem/geometry.hpp"
#include "statfem/mesh.hpp"

namespace statfem {

// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int n_points);

// Symmetric 7-point rule on a triangle, exact for degree 5. Weights sum to 1
// and are scaled by the triangle area at use sites.
struct TriangleRule {
  std::array<std::array<double, 3>, 7> barycentric;
  std::array<double, 7> weights;
};

const TriangleRule& triangle_rule_degree5();

struct QuadraturePoint {
  Point x;
  double weight = 0.0;
  int element = -1;
  std::array<double, 3> barycentric{};
};

// Composite rule over the mesh: 4-point Gauss-Legendre per 1D cell, the
// degree-5 triangle rule per 2D triangle. Each element is first split into
// `subdivisions` equal pieces (1D) or subdivisions^2 similar triangles (2D).
std::vector<QuadraturePoint> mesh_quadrature(const Mesh& mesh, int subdivisions = 1);

}  // namespace statfem
