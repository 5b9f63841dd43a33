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

#include "statfem/forcing.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

TEST(Kernel, ValuesAtKnownDistances) {
  ForcingModel m;
  m.sigma_f = 0.5;
  m.length_scale = 0.2;
  EXPECT_DOUBLE_EQ(kernel_eval(m, {0.3, 0.0}, {0.3, 0.0}), 0.25);
  EXPECT_NEAR(kernel_eval(m, {0.0, 0.0}, {0.2, 0.0}), 0.25 * std::exp(-0.5), 1e-15);
  EXPECT_NEAR(kernel_eval(m, {0.0, 0.0}, {0.2, 0.2}), 0.25 * std::exp(-1.0), 1e-15);
}

TEST(Kernel, MatrixIsSymmetricPsdWithMonotoneDecay) {
  ForcingModel m;
  std::vector<Point> pts;
  for (int i = 0; i <= 20; ++i) pts.push_back({i / 20.0, 0.0});
  const Eigen::MatrixXd c = kernel_matrix(m, pts, pts);
  EXPECT_EQ((c - c.transpose()).cwiseAbs().maxCoeff(), 0.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c);
  EXPECT_GE(es.eigenvalues().minCoeff(), -1e-12 * es.eigenvalues().maxCoeff());
  for (int j = 1; j < 21; ++j) EXPECT_LT(c(0, j), c(0, j - 1));
}

TEST(Kernel, RectangularShape) {
  ForcingModel m;
  const std::vector<Point> a = {{0.1, 0.1}, {0.5, 0.5}};
  const std::vector<Point> b = {{0.0, 0.0}, {0.2, 0.9}, {1.0, 1.0}};
  const Eigen::MatrixXd c = kernel_matrix(m, a, b);
  ASSERT_EQ(c.rows(), 2);
  ASSERT_EQ(c.cols(), 3);
  EXPECT_DOUBLE_EQ(c(1, 2), kernel_eval(m, a[1], b[2]));
}

TEST(ForcingModel, Validation) {
  ForcingModel m;
  EXPECT_NO_THROW(m.validate());
  m.length_scale = 0.0;
  EXPECT_THROW(m.validate(), InvalidArgument);
  m.length_scale = 0.4;
  m.sigma_f = -1.0;
  EXPECT_THROW(m.validate(), InvalidArgument);
}

TEST(ForcingModel, MeanFunction) {
  ForcingModel m;
  EXPECT_TRUE(m.has_constant_mean());
  EXPECT_EQ(m.mean({0.2, 0.0}), 1.0);
  m.mean_function = [](const Point& p) { return 2.0 * p.x; };
  EXPECT_FALSE(m.has_constant_mean());
  EXPECT_DOUBLE_EQ(m.mean({0.25, 0.0}), 0.5);
}

}  // namespace
}  // namespace statfem
