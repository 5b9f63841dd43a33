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

#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>

#include "statfem/geometry.hpp"
#include "statfem/mesh.hpp"

namespace statfem {

using SparseMatrix = Eigen::SparseMatrix<double>;

// A_ij = int_D grad(phi_i) . kappa grad(phi_j) over interior DOFs. kappa is
// sampled at the quadrature points; a non-positive value throws
// EllipticityError.
SparseMatrix assemble_stiffness(const Mesh& mesh, const ScalarField& kappa);

// Exact P1 mass matrix on interior DOFs.
SparseMatrix assemble_mass(const Mesh& mesh);

// Mass matrix with interior-DOF rows and one column per mesh node (boundary
// nodes included): the Gram matrix between the interior hats and the full
// nodal basis.
SparseMatrix assemble_mass_all_nodes(const Mesh& mesh);

// f_i = int_D f phi_i by composite quadrature.
Eigen::VectorXd assemble_load(const Mesh& mesh, const ScalarField& f);

// Stiffness and mass matrices of a mesh together with a sparse Cholesky
// factorization of the stiffness matrix. Immutable; solves are const and may
// run concurrently.
class FemSystem {
 public:
  FemSystem(Mesh mesh, ScalarField kappa);
  explicit FemSystem(Mesh mesh);

  const Mesh& mesh() const { return mesh_; }
  const SparseMatrix& stiffness() const { return stiffness_; }
  const SparseMatrix& mass() const { return mass_; }
  const ScalarField& conductivity() const { return kappa_; }
  int num_dofs() const { return mesh_.num_dofs(); }

  Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;
  Eigen::MatrixXd solve(const Eigen::MatrixXd& rhs) const;

 private:
  Mesh mesh_;
  ScalarField kappa_;
  SparseMatrix stiffness_;
  SparseMatrix mass_;
  std::shared_ptr<const Eigen::SimplicialLLT<SparseMatrix>> factor_;
};

// Solves A u = load; checks the residual against 1e-10 * |load|.
Eigen::VectorXd solve_fem(const FemSystem& system, const Eigen::VectorXd& load);

// P_ki = phi_i(points_k) for the interior nodal basis.
struct InterpolationMatrix {
  SparseMatrix matrix;
  std::vector<Point> points;
};

InterpolationMatrix basis_eval_matrix(const Mesh& mesh, std::span<const Point> points);

struct ErrorNorms {
  double l2 = 0.0;
  double h1_seminorm = 0.0;
};

// Quadrature approximations of ||u - u_h||_{L2} and |u - u_h|_{H1}.
ErrorNorms error_norms(const Mesh& mesh, const Eigen::VectorXd& dofs, const ScalarField& u_exact,
                       const GradientField& grad_exact);

}  // namespace statfem
