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

#include <functional>
#include <string>
#include <vector>

#include "statfem/config.hpp"
#include "statfem/rates.hpp"

namespace statfem {

struct ExperimentResult {
  ExperimentConfig config;
  // One report per noise level, or a single report for prior studies.
  std::vector<RateReport> reports;
};

using ProgressFn = std::function<void(const std::string&)>;

// Cell counts per level, in increasing order (h decreasing). For 2D this is
// the list of dyadic bases; every base n also uses levels 2n and 4n.
std::vector<int> ladder_cells(const ExperimentConfig& config);

// Runs the configured study end to end. Deterministic given the config; the
// worker count does not affect the numbers. Numerical failures are rethrown
// as NumericalError carrying the (h, eps) at which they happened.
ExperimentResult run_experiment(const ExperimentConfig& config, const ProgressFn& progress = {});

}  // namespace statfem
