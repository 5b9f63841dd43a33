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

#include "statfem/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "statfem/errors.hpp"

namespace statfem {

GaussLegendreRule gauss_legendre(int n_points) {
  if (n_points < 1) throw InvalidArgument("gauss_legendre: need at least one point");
  GaussLegendreRule rule;
  if (n_points == 1) {
    rule.nodes = {0.0};
    rule.weights = {2.0};
    return rule;
  }
  rule.nodes.resize(n_points);
  rule.weights.resize(n_points);
  const int half = (n_points + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton iteration on P_n from the Chebyshev-like initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n_points + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n_points; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n_points * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n_points - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n_points - 1 - i] = w;
  }
  return rule;
}

const TriangleRule& triangle_rule_degree5() {
  static const TriangleRule rule = [] {
    constexpr double a1 = 0.059715871789770, b1 = 0.470142064105115;
    constexpr double a2 = 0.797426985353087, b2 = 0.101286507323456;
    constexpr double w0 = 0.225, w1 = 0.132394152788506, w2 = 0.125939180544827;
    TriangleRule r;
    r.barycentric = {{{1.0 / 3, 1.0 / 3, 1.0 / 3},
                      {a1, b1, b1},
                      {b1, a1, b1},
                      {b1, b1, a1},
                      {a2, b2, b2},
                      {b2, a2, b2},
                      {b2, b2, a2}}};
    r.weights = {w0, w1, w1, w1, w2, w2, w2};
    return r;
  }();
  return rule;
}

std::vector<QuadraturePoint> mesh_quadrature(const Mesh& mesh, int subdivisions) {
  if (subdivisions < 1) throw InvalidArgument("mesh_quadrature: subdivisions must be >= 1");
  std::vector<QuadraturePoint> out;
  const auto& nodes = mesh.nodes();

  if (mesh.dim() == 1) {
    static const GaussLegendreRule gl = gauss_legendre(4);
    out.reserve(static_cast<std::size_t>(mesh.num_elements()) * subdivisions * 4);
    for (int e = 0; e < mesh.num_elements(); ++e) {
      const auto v = mesh.element(e);
      const double a = nodes[v[0]].x;
      const double len = nodes[v[1]].x - a;
      const double sub = 1.0 / subdivisions;
      for (int s = 0; s < subdivisions; ++s) {
        for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
          const double t = sub * (s + 0.5 * (gl.nodes[q] + 1.0));
          out.push_back({{a + t * len, 0.0}, 0.5 * gl.weights[q] * sub * len, e, {1.0 - t, t, 0.0}});
        }
      }
    }
    return out;
  }

  // Reference sub-triangles in (s, t) coordinates of the parent element.
  const int k = subdivisions;
  std::vector<std::array<std::array<double, 2>, 3>> pieces;
  for (int j = 0; j < k; ++j) {
    for (int i = 0; i + j < k; ++i) {
      pieces.push_back({{{double(i) / k, double(j) / k},
                         {double(i + 1) / k, double(j) / k},
                         {double(i) / k, double(j + 1) / k}}});
      if (i + j + 2 <= k) {
        pieces.push_back({{{double(i + 1) / k, double(j) / k},
                           {double(i + 1) / k, double(j + 1) / k},
                           {double(i) / k, double(j + 1) / k}}});
      }
    }
  }
  const TriangleRule& rule = triangle_rule_degree5();
  out.reserve(static_cast<std::size_t>(mesh.num_elements()) * pieces.size() * 7);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto v = mesh.element(e);
    const Point& p0 = nodes[v[0]];
    const Point& p1 = nodes[v[1]];
    const Point& p2 = nodes[v[2]];
    const double piece_area = mesh.element_measure(e) / (double(k) * k);
    for (const auto& piece : pieces) {
      for (int q = 0; q < 7; ++q) {
        const auto& lam = rule.barycentric[q];
        const double s = lam[0] * piece[0][0] + lam[1] * piece[1][0] + lam[2] * piece[2][0];
        const double t = lam[0] * piece[0][1] + lam[1] * piece[1][1] + lam[2] * piece[2][1];
        const std::array<double, 3> bary = {1.0 - s - t, s, t};
        const Point x{bary[0] * p0.x + bary[1] * p1.x + bary[2] * p2.x,
                      bary[0] * p0.y + bary[1] * p1.y + bary[2] * p2.y};
        out.push_back({x, rule.weights[q] * piece_area, e, bary});
      }
    }
  }
  return out;
}

}  // namespace statfem
