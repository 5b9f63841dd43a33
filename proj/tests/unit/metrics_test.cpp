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

#include "statfem/metrics.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "statfem/errors.hpp"
#include "statfem/exact_prior.hpp"
#include "statfem/random.hpp"

namespace statfem {
namespace {

Eigen::MatrixXd random_spd(int n, std::mt19937_64& rng, int rank = -1) {
  std::normal_distribution<double> nd;
  const int r = rank < 0 ? n : rank;
  Eigen::MatrixXd a(n, r);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < r; ++j) a(i, j) = nd(rng);
  }
  return a * a.transpose();
}

Eigen::VectorXd random_vec(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = nd(rng);
  return v;
}

// Textbook route: tr C1 + tr C2 - 2 tr (C1^{1/2} C2 C1^{1/2})^{1/2} by eigensolves.
double w2_reference(const Eigen::VectorXd& m1, const Eigen::MatrixXd& c1, const Eigen::VectorXd& m2,
                    const Eigen::MatrixXd& c2) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e1(c1);
  const Eigen::MatrixXd r1 = e1.operatorSqrt();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> e(r1 * c2 * r1);
  const double cross = e.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::sqrt(std::max(0.0, (m1 - m2).squaredNorm() + c1.trace() + c2.trace() - 2 * cross));
}

TEST(PsdSqrt, SimpleMatrices) {
  EXPECT_TRUE(sym_psd_sqrt(Eigen::MatrixXd::Identity(4, 4)).sqrt.isApprox(
      Eigen::MatrixXd::Identity(4, 4)));
  const Eigen::MatrixXd d = Eigen::Vector2d(4.0, 9.0).asDiagonal();
  const auto r = sym_psd_sqrt(d);
  EXPECT_NEAR(r.sqrt(0, 0), 2.0, 1e-14);
  EXPECT_NEAR(r.sqrt(1, 1), 3.0, 1e-14);
  EXPECT_NEAR(r.sqrt(0, 1), 0.0, 1e-14);
  EXPECT_NEAR(r.eigenvalues.sum(), 13.0, 1e-13);
}

TEST(PsdSqrt, SquaresBackToInput) {
  std::mt19937_64 rng(3);
  const Eigen::MatrixXd c = random_spd(12, rng);
  const auto r = sym_psd_sqrt(c);
  EXPECT_LE((r.sqrt * r.sqrt - c).norm(), 1e-10 * c.norm());
  EXPECT_EQ((r.sqrt - r.sqrt.transpose()).cwiseAbs().maxCoeff(), 0.0);
}

TEST(PsdSqrt, ClampsNegativeEigenvalues) {
  const Eigen::MatrixXd c = Eigen::Vector2d(1.0, -1e-3).asDiagonal();
  const auto r = sym_psd_sqrt(c);
  EXPECT_NEAR(r.clamped_mass, 1e-3, 1e-15);
  EXPECT_EQ(r.eigenvalues.minCoeff(), 0.0);
}

TEST(PsdSqrt, RejectsAsymmetric) {
  Eigen::MatrixXd c(2, 2);
  c << 1.0, 0.5, 0.0, 1.0;
  EXPECT_THROW(sym_psd_sqrt(c), InvalidArgument);
}

TEST(Wasserstein, IdenticalGaussiansAreAtZero) {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd c = random_spd(20, rng);
  const Eigen::VectorXd m = random_vec(20, rng);
  EXPECT_LE(wasserstein2_gaussian(m, c, m, c), 1e-7 * std::sqrt(c.trace()));
}

TEST(Wasserstein, CommutingCovariances) {
  const Eigen::VectorXd z = Eigen::VectorXd::Zero(2);
  const Eigen::MatrixXd i2 = Eigen::MatrixXd::Identity(2, 2);
  EXPECT_NEAR(wasserstein2_gaussian(z, i2, z, 4.0 * i2), std::sqrt(2.0), 1e-13);
}

TEST(Wasserstein, PureMeanShift) {
  std::mt19937_64 rng(7);
  const Eigen::MatrixXd c = random_spd(6, rng);
  const Eigen::VectorXd a = random_vec(6, rng);
  const Eigen::VectorXd b = random_vec(6, rng);
  EXPECT_NEAR(wasserstein2_gaussian(a, c, b, c), (a - b).norm(), 1e-6);
}

TEST(Wasserstein, MatchesEigenRouteAndIsSymmetric) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 6;
    const Eigen::MatrixXd c1 = random_spd(n, rng);
    const Eigen::MatrixXd c2 = random_spd(n, rng);
    const Eigen::VectorXd m1 = random_vec(n, rng);
    const Eigen::VectorXd m2 = random_vec(n, rng);
    const double w12 = wasserstein2_gaussian(m1, c1, m2, c2);
    const double w21 = wasserstein2_gaussian(m2, c2, m1, c1);
    EXPECT_NEAR(w12, w21, 1e-9 * std::max(1.0, w12));
    EXPECT_NEAR(w12, w2_reference(m1, c1, m2, c2), 1e-8 * std::max(1.0, w12));
  }
}

TEST(Wasserstein, MeanAndCovarianceParts) {
  std::mt19937_64 rng(13);
  const Eigen::MatrixXd c1 = random_spd(5, rng);
  const Eigen::MatrixXd c2 = random_spd(5, rng);
  const Eigen::VectorXd m1 = random_vec(5, rng);
  const Eigen::VectorXd m2 = random_vec(5, rng);
  const Eigen::VectorXd z = Eigen::VectorXd::Zero(5);
  const double full = wasserstein2_gaussian(m1, c1, m2, c2);
  const double centred = wasserstein2_gaussian(z, c1, z, c2);
  EXPECT_NEAR(full * full, (m1 - m2).squaredNorm() + centred * centred, 1e-9 * full * full);
}

TEST(Wasserstein, BoundedBySquareRootDifference) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::MatrixXd c1 = random_spd(5, rng, 1 + trial % 5);
    const Eigen::MatrixXd c2 = random_spd(5, rng, 1 + (trial / 5) % 5);
    const Eigen::VectorXd m1 = random_vec(5, rng);
    const Eigen::VectorXd m2 = random_vec(5, rng);
    const double w = wasserstein2_gaussian(m1, c1, m2, c2);
    const Eigen::MatrixXd s1 = sym_psd_sqrt(c1).sqrt;
    const Eigen::MatrixXd s2 = sym_psd_sqrt(c2).sqrt;
    const double upper = std::sqrt((m1 - m2).squaredNorm() + (s1 - s2).squaredNorm());
    ASSERT_LE(w, upper * (1 + 1e-9) + 1e-9);
    ASSERT_GE(w, (m1 - m2).norm() * (1 - 1e-9) - 1e-9);
  }
}

TEST(Wasserstein, TriangleInequality) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::MatrixXd c[3];
    Eigen::VectorXd m[3];
    for (int k = 0; k < 3; ++k) {
      c[k] = random_spd(4, rng);
      m[k] = random_vec(4, rng);
    }
    const double ab = wasserstein2_gaussian(m[0], c[0], m[1], c[1]);
    const double bc = wasserstein2_gaussian(m[1], c[1], m[2], c[2]);
    const double ac = wasserstein2_gaussian(m[0], c[0], m[2], c[2]);
    ASSERT_LE(ac, ab + bc + 1e-9);
  }
}

TEST(Wasserstein, WeightedFieldsUseTrapezoidGeometry) {
  const auto grid = uniform_grid_1d(9);
  std::mt19937_64 rng(23);
  GaussianField a{grid, random_vec(9, rng), random_spd(9, rng)};
  GaussianField b{grid, random_vec(9, rng), random_spd(9, rng)};
  const Eigen::VectorXd sw = grid->weights.cwiseSqrt();
  const double expected =
      w2_reference(sw.cwiseProduct(a.mean), sw.asDiagonal() * a.cov * sw.asDiagonal(),
                   sw.cwiseProduct(b.mean), sw.asDiagonal() * b.cov * sw.asDiagonal());
  EXPECT_NEAR(wasserstein2_gaussian_fields(a, b), expected, 1e-9);
  const auto pa = prepare_gaussian(a);
  const auto pb = prepare_gaussian(b);
  EXPECT_NEAR(wasserstein2_prepared(pa, pb), expected, 1e-9);
}

TEST(Wasserstein, RejectsDifferentGrids) {
  GaussianField a{uniform_grid_1d(5), Eigen::VectorXd::Zero(5), Eigen::MatrixXd::Identity(5, 5)};
  GaussianField b{uniform_grid_1d(6), Eigen::VectorXd::Zero(6), Eigen::MatrixXd::Identity(6, 6)};
  EXPECT_THROW(wasserstein2_gaussian_fields(a, b), IncompatibleFieldsError);
  EXPECT_THROW(wasserstein2_gaussian(a.mean, a.cov, b.mean, b.cov), IncompatibleFieldsError);
}

TEST(Wasserstein, StableUnderGridRefinement) {
  // Approximates an L2 distance, so doubling the grid barely moves it.
  ForcingModel model;
  ForcingModel shifted = model;
  shifted.mean_value = 1.2;
  shifted.length_scale = 0.3;
  double w[2];
  int k = 0;
  for (int n : {51, 101}) {
    const auto grid = uniform_grid_1d(n);
    w[k++] = wasserstein2_gaussian_fields(exact_prior_on_grid(model, grid),
                                          exact_prior_on_grid(shifted, grid));
  }
  EXPECT_LE(std::abs(w[0] - w[1]), 0.02 * w[1]);
}

TEST(Univariate, ClosedForm) {
  EXPECT_NEAR(wasserstein2_univariate_gaussian({0.0, 1.0}, {3.0, 4.0}), std::sqrt(10.0), 1e-15);
  EXPECT_EQ(wasserstein2_univariate_gaussian({1.0, 2.0}, {1.0, 2.0}), 0.0);
  EXPECT_THROW(wasserstein2_univariate_gaussian({0.0, -1.0}, {0.0, 1.0}), InvalidArgument);
}

TEST(Empirical, SortedCoupling) {
  const std::vector<double> a = {2.0, 0.0};
  const std::vector<double> b = {1.0, 3.0};
  EXPECT_DOUBLE_EQ(wasserstein2_empirical_1d(a, b), 1.0);
  const std::vector<double> c = {1.0};
  EXPECT_THROW(wasserstein2_empirical_1d(a, c), InvalidArgument);
}

TEST(Empirical, ConvergesToGaussianDistance) {
  NormalStream s1(1, 0), s2(2, 0);
  const int n = 100000;
  std::vector<double> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = s1.next();
    b[i] = 1.0 + s2.next();
  }
  EXPECT_NEAR(wasserstein2_empirical_1d(a, b), 1.0, 0.02);
}

}  // namespace
}  // namespace statfem
