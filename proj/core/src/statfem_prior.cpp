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

#include "statfem/statfem_prior.hpp"

#include <algorithm>
#include <cmath>

#include "statfem/errors.hpp"
#include "statfem/quadrature.hpp"

namespace statfem {
namespace {

using RowSparse = Eigen::SparseMatrix<double, Eigen::RowMajor>;

// Row block size for the kernel in exact-quadrature mode; bounds the dense
// working set to block * n_quad doubles.
constexpr int kKernelBlock = 256;

Eigen::MatrixXd exact_quadrature_kf(const Mesh& mesh, const ForcingModel& model) {
  // Keep sub-cells at most l_f / 2 across so the kernel is well resolved.
  const int sub = std::max(1, static_cast<int>(std::ceil(2.0 * mesh.h() / model.length_scale)));
  const auto quad = mesh_quadrature(mesh, sub);
  const int nq = static_cast<int>(quad.size());
  const int nv = mesh.vertices_per_element();

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(quad.size() * nv);
  std::vector<Point> pts(quad.size());
  for (int q = 0; q < nq; ++q) {
    pts[q] = quad[q].x;
    const auto v = mesh.element(quad[q].element);
    for (int a = 0; a < nv; ++a) {
      const int dof = mesh.dof_of_node(v[a]);
      if (dof >= 0) triplets.emplace_back(q, dof, quad[q].weight * quad[q].barycentric[a]);
    }
  }
  RowSparse phi(nq, mesh.num_dofs());
  phi.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::MatrixXd kf = Eigen::MatrixXd::Zero(mesh.num_dofs(), mesh.num_dofs());
  const std::span<const Point> all(pts);
  for (int start = 0; start < nq; start += kKernelBlock) {
    const int len = std::min(kKernelBlock, nq - start);
    const Eigen::MatrixXd k = kernel_matrix(model, all.subspan(start, len), all);
    const Eigen::MatrixXd t = k * phi;
    kf.noalias() += phi.middleRows(start, len).transpose() * t;
  }
  return kf;
}

Eigen::MatrixXd nodal_mass_kf(const Mesh& mesh, const ForcingModel& model) {
  const SparseMatrix m_all = assemble_mass_all_nodes(mesh);
  const Eigen::MatrixXd c = kernel_matrix(model, mesh.nodes(), mesh.nodes());
  const Eigen::MatrixXd t = m_all * c;
  return t * m_all.transpose();
}

void symmetrize(Eigen::MatrixXd& m) {
  m = 0.5 * (m + m.transpose()).eval();
}

}  // namespace

std::string_view to_string(KfMode mode) {
  return mode == KfMode::exact_quadrature ? "exact-quadrature" : "nodal-mass";
}

KfMode default_kf_mode(int dim) { return dim == 1 ? KfMode::exact_quadrature : KfMode::nodal_mass; }

ForcingCovarianceMatrix assemble_forcing_covariance(const FemSystem& fem, const ForcingModel& model,
                                                    KfMode mode) {
  model.validate();
  ForcingCovarianceMatrix out;
  out.mode = mode;
  out.matrix = mode == KfMode::exact_quadrature ? exact_quadrature_kf(fem.mesh(), model)
                                                : nodal_mass_kf(fem.mesh(), model);
  symmetrize(out.matrix);
  return out;
}

PointMoments statfem_moments(const FemSystem& fem, const ForcingCovarianceMatrix& kf,
                             const ForcingModel& model, std::span<const Point> points) {
  const int nu = fem.num_dofs();
  if (kf.matrix.rows() != nu || kf.matrix.cols() != nu) {
    throw InvalidArgument("forcing covariance does not match the FEM system");
  }
  const SparseMatrix p = basis_eval_matrix(fem.mesh(), points).matrix;
  const int n = static_cast<int>(points.size());

  // B = P A^{-1}, from whichever of n_u or N solves is cheaper.
  Eigen::MatrixXd b;
  if (nu <= n) {
    const Eigen::MatrixXd a_inv = fem.solve(Eigen::MatrixXd(Eigen::MatrixXd::Identity(nu, nu)));
    b = p * a_inv;
  } else {
    b = fem.solve(Eigen::MatrixXd(p.transpose())).transpose();
  }

  PointMoments out;
  out.mean = b * assemble_load(fem.mesh(), [&model](const Point& x) { return model.mean(x); });
  const Eigen::MatrixXd t = b * kf.matrix;
  out.cov.noalias() = t * b.transpose();
  symmetrize(out.cov);
  return out;
}

GaussianField statfem_prior_on_grid(const FemSystem& fem, const ForcingCovarianceMatrix& kf,
                                    const ForcingModel& model, GridPtr grid) {
  auto moments = statfem_moments(fem, kf, model, grid->points);
  return {std::move(grid), std::move(moments.mean), std::move(moments.cov)};
}

PriorWithSensors statfem_prior_with_sensors(const FemSystem& fem, const ForcingCovarianceMatrix& kf,
                                            const ForcingModel& model, GridPtr grid,
                                            const std::vector<Point>& sensors) {
  const auto pts = augmented_points(*grid, sensors);
  const auto moments = statfem_moments(fem, kf, model, pts);
  return split_joint(std::move(grid), moments.mean, moments.cov);
}

}  // namespace statfem
