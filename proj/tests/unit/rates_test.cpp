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

#include "statfem/rates.hpp"

#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

TEST(LogLogFit, ExactPowerLaw) {
  const std::vector<double> hs = {0.5, 0.25, 0.1, 0.05};
  std::vector<double> ws;
  for (double h : hs) ws.push_back(3.0 * h * h);
  const auto fit = fit_loglog_slope(hs, ws);
  EXPECT_NEAR(fit.slope, 2.0, 1e-12);
  EXPECT_NEAR(fit.intercept, std::log(3.0), 1e-12);
}

TEST(LogLogFit, ConstantData) {
  const std::vector<double> hs = {0.5, 0.25, 0.125};
  const std::vector<double> ws = {2.0, 2.0, 2.0};
  EXPECT_NEAR(fit_loglog_slope(hs, ws).slope, 0.0, 1e-14);
}

TEST(LogLogFit, ScaleInvariance) {
  const std::vector<double> hs = {0.3, 0.2, 0.1, 0.07};
  const std::vector<double> ws = {0.4, 0.21, 0.05, 0.03};
  std::vector<double> scaled;
  for (double w : ws) scaled.push_back(17.0 * w);
  const auto a = fit_loglog_slope(hs, ws);
  const auto b = fit_loglog_slope(hs, scaled);
  EXPECT_NEAR(a.slope, b.slope, 1e-12);
  EXPECT_NEAR(b.intercept - a.intercept, std::log(17.0), 1e-12);
}

TEST(LogLogFit, NoisyDataStaysClose) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-0.05, 0.05);
  std::vector<double> hs, ws;
  for (int n = 4; n <= 64; n += 2) {
    hs.push_back(1.0 / n);
    ws.push_back(std::pow(1.0 / n, 2.0) * (1.0 + u(rng)));
  }
  EXPECT_NEAR(fit_loglog_slope(hs, ws).slope, 2.0, 0.05);
}

TEST(LogLogFit, RejectsBadInput) {
  const std::vector<double> one = {0.1};
  EXPECT_THROW(fit_loglog_slope(one, one), InvalidArgument);
  const std::vector<double> hs = {0.1, 0.2};
  const std::vector<double> ws = {0.0, 1.0};
  EXPECT_THROW(fit_loglog_slope(hs, ws), InvalidArgument);
  const std::vector<double> three = {1, 2, 3};
  EXPECT_THROW(fit_loglog_slope(hs, three), InvalidArgument);
}

TEST(DyadicRatio, PowerLawGivesExponent) {
  for (double p : {1.0, 1.5, 2.0}) {
    const double h = 0.1;
    // Self-distances scale like the finer-level error.
    EXPECT_NEAR(dyadic_log_ratio(std::pow(h, p), std::pow(h / 2, p)), p, 1e-12);
    EXPECT_NEAR(dyadic_log_ratio_from_levels(std::pow(h, p), std::pow(h / 2, p),
                                             std::pow(h / 4, p)),
                p, 1e-12);
  }
  EXPECT_THROW(dyadic_log_ratio(0.0, 1.0), InvalidArgument);
}

TEST(SmoothLr, RunningMeanBelowCutoff) {
  const std::vector<double> hs = {0.3, 0.2, 0.1, 0.05};
  const std::vector<double> ratios = {100.0, 2.0, 6.0, 4.0};
  const auto s = smooth_lr(hs, ratios, 0.25);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_DOUBLE_EQ(s[0], 1.0);
  EXPECT_DOUBLE_EQ(s[1], 2.0);
  EXPECT_DOUBLE_EQ(s[2], 2.0);
}

TEST(SmoothLr, ConstantRatios) {
  const std::vector<double> hs = {0.1, 0.09, 0.08};
  const std::vector<double> ratios = {4.0, 4.0, 4.0};
  for (double v : smooth_lr(hs, ratios, 0.15)) EXPECT_DOUBLE_EQ(v, 2.0);
}

TEST(SmoothLr, RejectsBadInput) {
  const std::vector<double> up = {0.1, 0.2};
  const std::vector<double> r = {1.0, 1.0};
  EXPECT_THROW(smooth_lr(up, r, 1.0), InvalidArgument);
  const std::vector<double> down = {0.5, 0.4};
  EXPECT_THROW(smooth_lr(down, r, 0.1), InvalidArgument);
}

}  // namespace
}  // namespace statfem
