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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

ForcingModel constant_kernel(double sigma) {
  ForcingModel m;
  m.sigma_f = sigma;
  m.length_scale = 1e8;
  return m;
}

std::vector<Point> line_points(int count) {
  std::vector<Point> pts;
  for (int i = 0; i < count; ++i) pts.push_back({i / double(count - 1), 0.0});
  return pts;
}

TEST(ForcingCovariance, ConstantKernelGivesHSquared) {
  const int n = 10;
  const FemSystem fem(build_interval_mesh(n));
  const auto model = constant_kernel(0.3);
  for (KfMode mode : {KfMode::exact_quadrature, KfMode::nodal_mass}) {
    const auto kf = assemble_forcing_covariance(fem, model, mode);
    const double target = 0.09 / (n * n);
    EXPECT_LE((kf.matrix.array() - target).abs().maxCoeff(), 1e-12 * target) << to_string(mode);
  }
}

TEST(ForcingCovariance, ModesAgreeOnModerateMesh) {
  const FemSystem fem(build_interval_mesh(8));
  const ForcingModel model;
  const auto a = assemble_forcing_covariance(fem, model, KfMode::exact_quadrature).matrix;
  const auto b = assemble_forcing_covariance(fem, model, KfMode::nodal_mass).matrix;
  EXPECT_LE((a - b).norm(), 5e-2 * a.norm());
}

TEST(ForcingCovariance, SymmetricPsd) {
  for (const Mesh& mesh : {build_interval_mesh(12), build_unit_square_mesh(5)}) {
    const FemSystem fem(mesh);
    const auto kf = assemble_forcing_covariance(fem, ForcingModel{}, default_kf_mode(mesh.dim()));
    EXPECT_EQ((kf.matrix - kf.matrix.transpose()).cwiseAbs().maxCoeff(), 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(kf.matrix);
    EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12 * es.eigenvalues().maxCoeff());
  }
}

TEST(ForcingCovariance, DefaultModes) {
  EXPECT_EQ(default_kf_mode(1), KfMode::exact_quadrature);
  EXPECT_EQ(default_kf_mode(2), KfMode::nodal_mass);
}

TEST(StatFemMoments, ConstantKernelIsRankOneOfDeterministicSolution) {
  // Forcing reduces to one scalar N(0, s^2) times 1, so u = xi * x(1-x)/2 at
  // the nodes.
  const int n = 8;
  const FemSystem fem(build_interval_mesh(n));
  const auto model = constant_kernel(0.2);
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::exact_quadrature);
  std::vector<Point> nodes;
  for (int i = 0; i <= n; ++i) nodes.push_back({double(i) / n, 0.0});
  const auto m = statfem_moments(fem, kf, model, nodes);
  for (int i = 0; i <= n; ++i) {
    const double ui = 0.5 * nodes[i].x * (1.0 - nodes[i].x);
    EXPECT_NEAR(m.mean[i], ui, 1e-13);
    for (int j = 0; j <= n; ++j) {
      const double uj = 0.5 * nodes[j].x * (1.0 - nodes[j].x);
      EXPECT_NEAR(m.cov(i, j), 0.04 * ui * uj, 1e-13);
    }
  }
}

TEST(StatFemMoments, MeanAtCentreForEvenMeshes) {
  for (int n : {2, 4, 16, 64}) {
    const FemSystem fem(build_interval_mesh(n));
    const ForcingModel model;
    const auto kf = assemble_forcing_covariance(fem, model, KfMode::nodal_mass);
    const std::vector<Point> centre = {{0.5, 0.0}};
    EXPECT_NEAR(statfem_moments(fem, kf, model, centre).mean[0], 0.125, 1e-13) << n;
  }
}

TEST(StatFemMoments, ZeroForcingVarianceGivesZeroCovariance) {
  const FemSystem fem(build_interval_mesh(9));
  ForcingModel model;
  model.sigma_f = 0.0;
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::exact_quadrature);
  const auto pts = line_points(11);
  EXPECT_EQ(statfem_moments(fem, kf, model, pts).cov.cwiseAbs().maxCoeff(), 0.0);
}

TEST(StatFemMoments, BoundaryPointsAreDeterministicZero) {
  const FemSystem fem(build_unit_square_mesh(4));
  const ForcingModel model;
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::nodal_mass);
  const std::vector<Point> pts = {{0.0, 0.3}, {0.5, 0.5}, {1.0, 1.0}, {0.7, 0.0}};
  const auto m = statfem_moments(fem, kf, model, pts);
  for (int k : {0, 2, 3}) {
    EXPECT_EQ(m.mean[k], 0.0);
    EXPECT_EQ(m.cov.row(k).cwiseAbs().sum(), 0.0);
  }
  EXPECT_GT(m.cov(1, 1), 0.0);
}

TEST(StatFemMoments, SolveOrderDoesNotMatter) {
  // Few points (N solves) and many points (n_u solves) agree on shared points.
  const FemSystem fem(build_interval_mesh(20));
  const ForcingModel model;
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::exact_quadrature);
  const std::vector<Point> few = {{0.13, 0.0}, {0.5, 0.0}};
  auto many = line_points(51);
  many.insert(many.begin(), few.begin(), few.end());
  const auto a = statfem_moments(fem, kf, model, few);
  const auto b = statfem_moments(fem, kf, model, many);
  EXPECT_LE((a.mean - b.mean.head(2)).cwiseAbs().maxCoeff(), 1e-14);
  EXPECT_LE((a.cov - b.cov.topLeftCorner(2, 2)).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(StatFemMoments, SensorSplitMatchesJointMoments) {
  const FemSystem fem(build_interval_mesh(10));
  const ForcingModel model;
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::exact_quadrature);
  const auto grid = uniform_grid_1d(7);
  const std::vector<Point> sensors = {{0.25, 0.0}, {0.61, 0.0}};
  const auto both = statfem_prior_with_sensors(fem, kf, model, grid, sensors);
  const auto on_grid = statfem_prior_on_grid(fem, kf, model, grid);
  const auto at_s = statfem_moments(fem, kf, model, sensors);
  EXPECT_LE((both.field.cov - on_grid.cov).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((both.at_sensors.cov - at_s.cov).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(both.at_sensors.cross.rows(), 7);
  EXPECT_EQ(both.at_sensors.cross.cols(), 2);
}

TEST(StatFemMoments, GridCovarianceIsPsd) {
  const FemSystem fem(build_unit_square_mesh(6));
  const ForcingModel model;
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::nodal_mass);
  const auto field = statfem_prior_on_grid(fem, kf, model, uniform_grid_2d(9));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(field.cov);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12 * es.eigenvalues().maxCoeff());
}

TEST(StatFemMoments, MismatchedForcingCovarianceThrows) {
  const FemSystem fem(build_interval_mesh(6));
  const FemSystem other(build_interval_mesh(7));
  const ForcingModel model;
  const auto kf = assemble_forcing_covariance(other, model, KfMode::nodal_mass);
  const std::vector<Point> pts = {{0.5, 0.0}};
  EXPECT_THROW(statfem_moments(fem, kf, model, pts), InvalidArgument);
}

}  // namespace
}  // namespace statfem
