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

#include "statfem/fem.hpp"

#include <array>
#include <cmath>
#include <string>

#include "statfem/errors.hpp"
#include "statfem/quadrature.hpp"

namespace statfem {
namespace {

using Triplet = Eigen::Triplet<double>;

// Gradients of the element's P1 shape functions (constant per element).
std::array<std::array<double, 2>, 3> shape_gradients(const Mesh& mesh, int e) {
  const auto v = mesh.element(e);
  const auto& nodes = mesh.nodes();
  if (mesh.dim() == 1) {
    const double len = nodes[v[1]].x - nodes[v[0]].x;
    return {{{-1.0 / len, 0.0}, {1.0 / len, 0.0}, {0.0, 0.0}}};
  }
  const Point& p0 = nodes[v[0]];
  const Point& p1 = nodes[v[1]];
  const Point& p2 = nodes[v[2]];
  const double j11 = p1.x - p0.x, j12 = p2.x - p0.x;
  const double j21 = p1.y - p0.y, j22 = p2.y - p0.y;
  const double det = j11 * j22 - j12 * j21;
  // Rows of J^{-T} applied to reference gradients (-1,-1), (1,0), (0,1).
  const std::array<double, 2> g1 = {j22 / det, -j12 / det};
  const std::array<double, 2> g2 = {-j21 / det, j11 / det};
  return {{{-g1[0] - g2[0], -g1[1] - g2[1]}, g1, g2}};
}

SparseMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets) {
  SparseMatrix m(rows, cols);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

}  // namespace

SparseMatrix assemble_stiffness(const Mesh& mesh, const ScalarField& kappa) {
  const auto quad = mesh_quadrature(mesh);
  std::vector<double> kappa_integral(mesh.num_elements(), 0.0);
  for (const auto& q : quad) {
    const double k = kappa(q.x);
    if (!(k > 0.0)) {
      throw EllipticityError("conductivity is not positive (" + std::to_string(k) + ") at (" +
                             std::to_string(q.x.x) + ", " + std::to_string(q.x.y) + ")");
    }
    kappa_integral[q.element] += q.weight * k;
  }

  const int nv = mesh.vertices_per_element();
  std::vector<Triplet> triplets;
  triplets.reserve(static_cast<std::size_t>(mesh.num_elements()) * nv * nv);
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto v = mesh.element(e);
    const auto grads = shape_gradients(mesh, e);
    for (int a = 0; a < nv; ++a) {
      const int row = mesh.dof_of_node(v[a]);
      if (row < 0) continue;
      for (int b = 0; b < nv; ++b) {
        const int col = mesh.dof_of_node(v[b]);
        if (col < 0) continue;
        const double dot = grads[a][0] * grads[b][0] + grads[a][1] * grads[b][1];
        triplets.emplace_back(row, col, kappa_integral[e] * dot);
      }
    }
  }
  return from_triplets(mesh.num_dofs(), mesh.num_dofs(), triplets);
}

namespace {

// Local P1 mass entry: measure * (1 + delta_ab) / ((d+1)(d+2)).
double local_mass(const Mesh& mesh, int e, int a, int b) {
  const double scale = mesh.dim() == 1 ? 6.0 : 12.0;
  return mesh.element_measure(e) * (a == b ? 2.0 : 1.0) / scale;
}

}  // namespace

SparseMatrix assemble_mass(const Mesh& mesh) {
  const int nv = mesh.vertices_per_element();
  std::vector<Triplet> triplets;
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto v = mesh.element(e);
    for (int a = 0; a < nv; ++a) {
      const int row = mesh.dof_of_node(v[a]);
      if (row < 0) continue;
      for (int b = 0; b < nv; ++b) {
        const int col = mesh.dof_of_node(v[b]);
        if (col < 0) continue;
        triplets.emplace_back(row, col, local_mass(mesh, e, a, b));
      }
    }
  }
  return from_triplets(mesh.num_dofs(), mesh.num_dofs(), triplets);
}

SparseMatrix assemble_mass_all_nodes(const Mesh& mesh) {
  const int nv = mesh.vertices_per_element();
  std::vector<Triplet> triplets;
  for (int e = 0; e < mesh.num_elements(); ++e) {
    const auto v = mesh.element(e);
    for (int a = 0; a < nv; ++a) {
      const int row = mesh.dof_of_node(v[a]);
      if (row < 0) continue;
      for (int b = 0; b < nv; ++b) {
        triplets.emplace_back(row, v[b], local_mass(mesh, e, a, b));
      }
    }
  }
  return from_triplets(mesh.num_dofs(), mesh.num_nodes(), triplets);
}

Eigen::VectorXd assemble_load(const Mesh& mesh, const ScalarField& f) {
  Eigen::VectorXd load = Eigen::VectorXd::Zero(mesh.num_dofs());
  const int nv = mesh.vertices_per_element();
  for (const auto& q : mesh_quadrature(mesh)) {
    const double value = q.weight * f(q.x);
    const auto v = mesh.element(q.element);
    for (int a = 0; a < nv; ++a) {
      const int dof = mesh.dof_of_node(v[a]);
      if (dof >= 0) load[dof] += value * q.barycentric[a];
    }
  }
  return load;
}

FemSystem::FemSystem(Mesh mesh, ScalarField kappa)
    : mesh_(std::move(mesh)), kappa_(std::move(kappa)) {
  stiffness_ = assemble_stiffness(mesh_, kappa_);
  mass_ = assemble_mass(mesh_);
  auto factor = std::make_shared<Eigen::SimplicialLLT<SparseMatrix>>(stiffness_);
  if (factor->info() != Eigen::Success) {
    throw SingularSystemError("stiffness matrix is not positive definite (n_u = " +
                              std::to_string(mesh_.num_dofs()) + ")");
  }
  factor_ = std::move(factor);
}

FemSystem::FemSystem(Mesh mesh) : FemSystem(std::move(mesh), constant_field(1.0)) {}

Eigen::VectorXd FemSystem::solve(const Eigen::VectorXd& rhs) const {
  if (rhs.size() != num_dofs()) {
    throw InvalidArgument("FemSystem::solve: rhs has length " + std::to_string(rhs.size()) +
                          ", expected " + std::to_string(num_dofs()));
  }
  return factor_->solve(rhs);
}

Eigen::MatrixXd FemSystem::solve(const Eigen::MatrixXd& rhs) const {
  if (rhs.rows() != num_dofs()) {
    throw InvalidArgument("FemSystem::solve: rhs has " + std::to_string(rhs.rows()) +
                          " rows, expected " + std::to_string(num_dofs()));
  }
  return factor_->solve(rhs);
}

Eigen::VectorXd solve_fem(const FemSystem& system, const Eigen::VectorXd& load) {
  Eigen::VectorXd u = system.solve(load);
  const double residual = (system.stiffness() * u - load).norm();
  if (!(residual <= 1e-10 * load.norm())) {
    throw SingularSystemError("FEM solve residual " + std::to_string(residual) +
                              " exceeds tolerance");
  }
  return u;
}

InterpolationMatrix basis_eval_matrix(const Mesh& mesh, std::span<const Point> points) {
  std::vector<Triplet> triplets;
  triplets.reserve(points.size() * mesh.vertices_per_element());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto loc = mesh.locate(points[k]);
    const auto v = mesh.element(loc.element);
    for (int a = 0; a < mesh.vertices_per_element(); ++a) {
      const int dof = mesh.dof_of_node(v[a]);
      if (dof >= 0 && loc.barycentric[a] != 0.0) {
        triplets.emplace_back(static_cast<int>(k), dof, loc.barycentric[a]);
      }
    }
  }
  return {from_triplets(static_cast<int>(points.size()), mesh.num_dofs(), triplets),
          std::vector<Point>(points.begin(), points.end())};
}

ErrorNorms error_norms(const Mesh& mesh, const Eigen::VectorXd& dofs, const ScalarField& u_exact,
                       const GradientField& grad_exact) {
  if (dofs.size() != mesh.num_dofs()) throw InvalidArgument("error_norms: DOF vector size mismatch");
  const int nv = mesh.vertices_per_element();
  double l2 = 0.0;
  double h1 = 0.0;
  int current = -1;
  std::array<std::array<double, 2>, 3> grads{};
  std::array<double, 3> values{};
  std::array<double, 2> grad_h{};
  for (const auto& q : mesh_quadrature(mesh)) {
    if (q.element != current) {
      current = q.element;
      grads = shape_gradients(mesh, current);
      const auto v = mesh.element(current);
      grad_h = {0.0, 0.0};
      for (int a = 0; a < nv; ++a) {
        const int dof = mesh.dof_of_node(v[a]);
        values[a] = dof >= 0 ? dofs[dof] : 0.0;
        grad_h[0] += values[a] * grads[a][0];
        grad_h[1] += values[a] * grads[a][1];
      }
    }
    double uh = 0.0;
    for (int a = 0; a < nv; ++a) uh += values[a] * q.barycentric[a];
    const double du = u_exact(q.x) - uh;
    const auto g = grad_exact(q.x);
    const double gx = g[0] - grad_h[0];
    const double gy = mesh.dim() == 2 ? g[1] - grad_h[1] : 0.0;
    l2 += q.weight * du * du;
    h1 += q.weight * (gx * gx + gy * gy);
  }
  return {std::sqrt(l2), std::sqrt(h1)};
}

}  // namespace statfem
