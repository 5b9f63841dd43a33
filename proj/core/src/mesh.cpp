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

#include "statfem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

constexpr double kDomainTol = 1e-12;

bool on_unit_boundary(double t) { return t <= kDomainTol || t >= 1.0 - kDomainTol; }

double clamp_unit(double t, const Point& p) {
  if (!(t >= -kDomainTol && t <= 1.0 + kDomainTol)) {
    throw OutOfDomainError("point (" + std::to_string(p.x) + ", " + std::to_string(p.y) +
                           ") lies outside the closed unit domain");
  }
  return std::clamp(t, 0.0, 1.0);
}

}  // namespace

void Mesh::classify_nodes() {
  dof_of_node_.assign(nodes_.size(), -1);
  interior_nodes_.clear();
  boundary_nodes_.clear();
  for (int i = 0; i < num_nodes(); ++i) {
    const Point& p = nodes_[i];
    const bool boundary = on_unit_boundary(p.x) || (dim_ == 2 && on_unit_boundary(p.y));
    if (boundary) {
      boundary_nodes_.push_back(i);
    } else {
      dof_of_node_[i] = static_cast<int>(interior_nodes_.size());
      interior_nodes_.push_back(i);
    }
  }
}

double Mesh::element_measure(int e) const {
  const auto v = element(e);
  if (dim_ == 1) return std::abs(nodes_[v[1]].x - nodes_[v[0]].x);
  const Point& a = nodes_[v[0]];
  const Point& b = nodes_[v[1]];
  const Point& c = nodes_[v[2]];
  return 0.5 * std::abs((b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y));
}

Mesh::Location Mesh::locate(const Point& p) const {
  const int n = cells_per_side_;
  const double x = clamp_unit(p.x, p);
  Location loc;
  if (dim_ == 1) {
    if (std::abs(p.y) > kDomainTol) throw OutOfDomainError("1D point with nonzero y");
    const int i = std::min(static_cast<int>(x * n), n - 1);
    const double t = x * n - i;
    loc.element = i;
    loc.barycentric = {1.0 - t, t, 0.0};
    return loc;
  }
  const double y = clamp_unit(p.y, p);
  const int i = std::min(static_cast<int>(x * n), n - 1);
  const int j = std::min(static_cast<int>(y * n), n - 1);
  const double xi = x * n - i;
  const double eta = y * n - j;
  const int square = i + j * n;
  // Lower triangle (v00, v10, v11) when xi >= eta, else (v00, v11, v01).
  if (xi >= eta) {
    loc.element = 2 * square;
    loc.barycentric = {1.0 - xi, xi - eta, eta};
  } else {
    loc.element = 2 * square + 1;
    loc.barycentric = {1.0 - eta, xi, eta - xi};
  }
  return loc;
}

Mesh build_interval_mesh(int n_cells) {
  if (n_cells < 2) {
    throw InvalidArgument("build_interval_mesh: n_cells must be >= 2 (got " +
                          std::to_string(n_cells) + ")");
  }
  Mesh mesh;
  mesh.dim_ = 1;
  mesh.cells_per_side_ = n_cells;
  mesh.h_ = 1.0 / n_cells;
  mesh.nodes_.resize(n_cells + 1);
  for (int i = 0; i <= n_cells; ++i) {
    mesh.nodes_[i] = {static_cast<double>(i) / n_cells, 0.0};
  }
  mesh.connectivity_.reserve(2 * static_cast<std::size_t>(n_cells));
  for (int i = 0; i < n_cells; ++i) {
    mesh.connectivity_.push_back(i);
    mesh.connectivity_.push_back(i + 1);
  }
  mesh.classify_nodes();
  return mesh;
}

Mesh build_unit_square_mesh(int n_per_side) {
  if (n_per_side < 2) {
    throw InvalidArgument("build_unit_square_mesh: n_per_side must be >= 2 (got " +
                          std::to_string(n_per_side) + ")");
  }
  const int n = n_per_side;
  Mesh mesh;
  mesh.dim_ = 2;
  mesh.cells_per_side_ = n;
  mesh.h_ = std::sqrt(2.0) / n;
  mesh.nodes_.resize(static_cast<std::size_t>(n + 1) * (n + 1));
  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      mesh.nodes_[i + j * (n + 1)] = {static_cast<double>(i) / n, static_cast<double>(j) / n};
    }
  }
  auto id = [n](int i, int j) { return i + j * (n + 1); };
  mesh.connectivity_.reserve(6 * static_cast<std::size_t>(n) * n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      for (int v : {id(i, j), id(i + 1, j), id(i + 1, j + 1)}) mesh.connectivity_.push_back(v);
      for (int v : {id(i, j), id(i + 1, j + 1), id(i, j + 1)}) mesh.connectivity_.push_back(v);
    }
  }
  mesh.classify_nodes();
  return mesh;
}

}  // namespace statfem
