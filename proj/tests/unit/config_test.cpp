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

#include "statfem/config.hpp"

#include <string>

#include <gtest/gtest.h>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

std::string error_text(std::string_view cfg) {
  try {
    parse_config(cfg);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

TEST(Config, DefaultsAreValidForEveryKind) {
  for (auto kind : {ExperimentKind::prior_1d, ExperimentKind::posterior_1d, ExperimentKind::prior_2d,
                    ExperimentKind::posterior_2d, ExperimentKind::max_prior_1d,
                    ExperimentKind::max_posterior_1d}) {
    const auto c = default_config(kind);
    EXPECT_TRUE(config_errors(c).empty()) << to_string(kind);
    EXPECT_EQ(c.seed, 12345u);
    EXPECT_EQ(parse_experiment_kind(to_string(kind)), kind);
  }
  EXPECT_FALSE(parse_experiment_kind("prior-3d").has_value());
}

TEST(Config, OverridesAndComments) {
  const auto c = parse_config(
      "# comment\n"
      "experiment = posterior-1d\n"
      "sigma_f = 0.2   # trailing\n"
      "h_ladder = list(1/4, 1/8, 1/16)\n"
      "epsilons = 1e-3, 1e-2\n"
      "sensor_box = 0.1, 0.9\n"
      "kf_mode = nodal-mass\n"
      "seed = 7\n");
  EXPECT_EQ(c.experiment, ExperimentKind::posterior_1d);
  EXPECT_DOUBLE_EQ(c.sigma_f, 0.2);
  ASSERT_EQ(c.h_ladder.kind, LadderSpec::Kind::list);
  EXPECT_EQ(c.h_ladder.values, (std::vector<double>{0.25, 0.125, 0.0625}));
  EXPECT_EQ(c.epsilons, (std::vector<double>{1e-3, 1e-2}));
  EXPECT_DOUBLE_EQ(c.sensor_lo, 0.1);
  EXPECT_EQ(c.kf_mode, KfMode::nodal_mass);
  EXPECT_EQ(c.seed, 7u);
  EXPECT_EQ(c.sensor_count, 10);  // untouched default
}

TEST(Config, CommandLineKindWins) {
  const auto c = parse_config("experiment = prior-1d\n", ExperimentKind::max_prior_1d);
  EXPECT_EQ(c.experiment, ExperimentKind::max_prior_1d);
  EXPECT_DOUBLE_EQ(c.l_f, 0.01);
}

TEST(Config, ReportsEveryBadField) {
  const auto msg = error_text(
      "experiment = prior-1d\n"
      "sigma_f = -1\n"
      "grid_n = abc\n"
      "colour = red\n"
      "seed = 1\n"
      "seed = 2\n");
  EXPECT_NE(msg.find("sigma_f"), std::string::npos);
  EXPECT_NE(msg.find("grid_n"), std::string::npos);
  EXPECT_NE(msg.find("colour: unknown key"), std::string::npos);
  EXPECT_NE(msg.find("seed: given more than once"), std::string::npos);
}

TEST(Config, MissingOrUnknownExperiment) {
  EXPECT_NE(error_text("sigma_f = 0.1\n").find("experiment: missing"), std::string::npos);
  EXPECT_NE(error_text("experiment = foo\n").find("unknown experiment"), std::string::npos);
  EXPECT_NE(error_text("experiment = prior-1d\nnonsense\n").find("expected key = value"),
            std::string::npos);
}

TEST(Config, SemanticChecks) {
  EXPECT_NE(error_text("experiment = prior-2d\nh_ladder = geometric(0.25, 0.02, 10)\n")
                .find("need a dyadic ladder"),
            std::string::npos);
  EXPECT_NE(error_text("experiment = posterior-2d\nsensor_count = 10\n").find("perfect square"),
            std::string::npos);
  EXPECT_NE(error_text("experiment = posterior-1d\nepsilons = 0\n").find("epsilons"),
            std::string::npos);
  EXPECT_NE(error_text("experiment = prior-1d\nh_ladder = list(0.3, 0.2)\n").find("is not 1/n"),
            std::string::npos);
}

TEST(Config, CanonicalTextRoundTrips) {
  auto c = default_config(ExperimentKind::max_posterior_1d);
  c.seed = 99;
  c.sample_coupling = SampleCoupling::common;
  const auto text = canonical_text(c);
  const auto back = parse_config(text);
  EXPECT_EQ(canonical_text(back), text);
  EXPECT_EQ(back.sample_coupling, SampleCoupling::common);
}

TEST(Config, FullRangeSwitchesTwoDimensionalLadder) {
  auto c = default_config(ExperimentKind::prior_2d);
  apply_full_range(c);
  EXPECT_EQ(c.h_ladder.n_min, 3);
  EXPECT_EQ(c.h_ladder.n_max, 30);
  EXPECT_DOUBLE_EQ(c.fine_h, 1.0 / 120);
  EXPECT_TRUE(config_errors(c).empty());
}

TEST(Config, ShippedConfigsMatchDefaults) {
  for (auto kind : {ExperimentKind::prior_1d, ExperimentKind::posterior_1d, ExperimentKind::prior_2d,
                    ExperimentKind::posterior_2d, ExperimentKind::max_prior_1d,
                    ExperimentKind::max_posterior_1d}) {
    const std::string name(to_string(kind));
    const auto c = load_config(std::string(STATFEM_CONFIG_DIR) + "/" + name + ".cfg");
    EXPECT_EQ(canonical_text(c), canonical_text(default_config(kind))) << name;
    EXPECT_EQ(c.output_dir, "results/" + name);
  }
}

TEST(Config, LoadMissingFileThrows) {
  EXPECT_THROW(load_config("/nonexistent/statfem.cfg"), ConfigError);
}

}  // namespace
}  // namespace statfem
