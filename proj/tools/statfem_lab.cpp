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

// statfem-lab: runs one convergence study from a config file and writes
// distances.csv, rates.csv (lr.csv for 2D) and manifest.txt.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical failure,
// 1 anything else (I/O, internal).

#include <chrono>
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "statfem/config.hpp"
#include "statfem/csv.hpp"
#include "statfem/errors.hpp"
#include "statfem/experiment.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitNumerical = 3;

std::optional<statfem::ExperimentKind> kind_flag(const std::string& name) {
  if (name.empty()) return std::nullopt;
  auto kind = statfem::parse_experiment_kind(name);
  if (!kind) throw statfem::ConfigError("--experiment: unknown experiment '" + name + "'");
  return kind;
}

void print_summary(const statfem::ExperimentResult& result) {
  for (const auto& r : result.reports) {
    std::printf("%-17s", r.experiment.c_str());
    if (r.epsilon) std::printf("  eps=%-8.3g", *r.epsilon);
    std::printf("  slope=%.4f  intercept=%.4f", r.fit.slope, r.fit.intercept);
    if (r.final_smoothed_lr) std::printf("  smoothed_lr=%.4f", *r.final_smoothed_lr);
    std::printf("\n");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistical FEM convergence laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string experiment;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  bool full_range = false;
  bool quiet = false;

  auto* run = app.add_subcommand("run", "Run one experiment and write its CSV files");
  run->add_option("--config", config_path, "Config file (key = value)")->required();
  run->add_option("--experiment", experiment, "Override the experiment named in the config");
  run->add_option("--seed", seed, "Override the seed");
  run->add_option("--out", out_dir, "Override output_dir");
  run->add_flag("--full-range", full_range,
                "2D only: ladder down to 120 cells per side and a 1/120 data mesh (large memory)");
  run->add_flag("-q,--quiet", quiet, "No progress output");

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check a config file and print it canonically");
  validate->add_option("--config", validate_path, "Config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) {
      const auto config = statfem::load_config(validate_path);
      std::cout << statfem::canonical_text(config);
      return 0;
    }

    auto config = statfem::load_config(config_path, kind_flag(experiment));
    if (seed) config.seed = *seed;
    if (!out_dir.empty()) config.output_dir = out_dir;
    if (full_range) statfem::apply_full_range(config);
    statfem::validate_config(config);

    const auto start = std::chrono::steady_clock::now();
    statfem::ProgressFn progress;
    if (!quiet) {
      progress = [start](const std::string& msg) {
        const double s =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::fprintf(stderr, "[%7.1fs] %s\n", s, msg.c_str());
      };
    }
    const auto result = statfem::run_experiment(config, progress);
    statfem::write_outputs(result, config.output_dir);
    print_summary(result);
    return 0;
  } catch (const statfem::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const statfem::NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
