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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "statfem/statfem_prior.hpp"

namespace statfem {

enum class ExperimentKind {
  prior_1d,
  posterior_1d,
  prior_2d,
  posterior_2d,
  max_prior_1d,
  max_posterior_1d,
};

std::string_view to_string(ExperimentKind kind);
std::optional<ExperimentKind> parse_experiment_kind(std::string_view name);
int experiment_dim(ExperimentKind kind);
bool experiment_is_dyadic(ExperimentKind kind);
bool experiment_has_sensors(ExperimentKind kind);
bool experiment_is_sampled(ExperimentKind kind);

// How the StatFEM trajectories relate to the reference trajectories in the
// max-functional studies: fresh normals (independent) or the reference ones
// (common).
enum class SampleCoupling { independent, common };

std::string_view to_string(SampleCoupling coupling);

struct LadderSpec {
  enum class Kind { geometric, dyadic, list };
  Kind kind = Kind::geometric;
  double h_max = 0.25;
  double h_min = 0.02;
  int count = 30;
  int n_min = 3;
  int n_max = 16;
  std::vector<double> values;
};

std::string to_string(const LadderSpec& ladder);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::prior_1d;
  double sigma_f = 0.1;
  double l_f = 0.4;
  LadderSpec h_ladder;
  // Points per side of the reference grid.
  int grid_n = 51;
  // Total sensor count; a perfect square in 2D.
  int sensor_count = 0;
  double sensor_lo = 0.01;
  double sensor_hi = 0.99;
  std::vector<double> epsilons;
  int n_samples = 1000;
  std::uint64_t seed = 12345;
  KfMode kf_mode = KfMode::exact_quadrature;
  // Mesh width of the 2D data-source mesh, read as 1/cells_per_side.
  double fine_h = 1.0 / 64;
  std::string output_dir = "results";
  double lr_cutoff = 0.15;
  SampleCoupling sample_coupling = SampleCoupling::independent;
};

ExperimentConfig default_config(ExperimentKind kind);

// Flat "key = value" text; '#' starts a comment. The experiment key selects
// the defaults that the remaining keys override; `kind` (from the command
// line) takes precedence over the file. Throws ConfigError naming every bad
// field.
ExperimentConfig parse_config(std::string_view text, std::optional<ExperimentKind> kind = {});
ExperimentConfig load_config(const std::filesystem::path& path,
                             std::optional<ExperimentKind> kind = {});

// Empty when the config is valid; otherwise one "field: problem" per entry.
std::vector<std::string> config_errors(const ExperimentConfig& config);
void validate_config(const ExperimentConfig& config);

// Canonical key = value rendering (all fields, fixed order); hashed into the
// run manifest.
std::string canonical_text(const ExperimentConfig& config);

// Switches a 2D config to the long ladder dyadic(3, 30) and a 1/120 data mesh.
void apply_full_range(ExperimentConfig& config);

}  // namespace statfem
