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
#include <span>
#include <vector>

#include "statfem/geometry.hpp"

namespace statfem {

// Uniform simplicial mesh of [0,1] or [0,1]^2.
//
// Interior nodes carry the degrees of freedom (homogeneous Dirichlet data on
// the whole boundary). In 2D every grid square is split along its
// lower-left to upper-right diagonal, and h is the triangle diameter
// sqrt(2)/n.
class Mesh {
 public:
  // Element containing a point plus the barycentric coordinates of the point
  // with respect to that element's vertices (only the first dim+1 are used).
  struct Location {
    int element = -1;
    std::array<double, 3> barycentric{};
  };

  int dim() const { return dim_; }
  int cells_per_side() const { return cells_per_side_; }
  double h() const { return h_; }

  const std::vector<Point>& nodes() const { return nodes_; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  int num_elements() const {
    return static_cast<int>(connectivity_.size()) / vertices_per_element();
  }
  int vertices_per_element() const { return dim_ + 1; }

  std::span<const int> element(int e) const {
    return {connectivity_.data() + static_cast<std::size_t>(e) * vertices_per_element(),
            static_cast<std::size_t>(vertices_per_element())};
  }

  const std::vector<int>& interior_nodes() const { return interior_nodes_; }
  const std::vector<int>& boundary_nodes() const { return boundary_nodes_; }
  // DOF index of a node, or -1 for boundary nodes.
  int dof_of_node(int node) const { return dof_of_node_[node]; }
  int num_dofs() const { return static_cast<int>(interior_nodes_.size()); }

  // Length (1D) or area (2D) of element e.
  double element_measure(int e) const;

  // Throws OutOfDomainError for points outside the closed domain.
  Location locate(const Point& p) const;

 private:
  friend Mesh build_interval_mesh(int n_cells);
  friend Mesh build_unit_square_mesh(int n_per_side);

  void classify_nodes();

  int dim_ = 1;
  int cells_per_side_ = 0;
  double h_ = 0.0;
  std::vector<Point> nodes_;
  std::vector<int> connectivity_;
  std::vector<int> interior_nodes_;
  std::vector<int> boundary_nodes_;
  std::vector<int> dof_of_node_;
};

// n_cells + 1 equispaced nodes on [0,1]. Requires n_cells >= 2.
Mesh build_interval_mesh(int n_cells);

// (n+1)^2 nodes, 2 n^2 triangles on [0,1]^2. Requires n_per_side >= 2.
Mesh build_unit_square_mesh(int n_per_side);

}  // namespace statfem
