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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "statfem/config.hpp"
#include "statfem/experiment.hpp"
#include "statfem/rates.hpp"

namespace statfem {

// Scientific notation, 12 significant digits.
std::string format_double(double v);

// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view data);

std::string distances_csv(std::span<const RateReport> reports);
std::string rates_csv(std::span<const RateReport> reports);
// Dyadic log-ratio sequences; header only when no report carries one.
std::string lr_csv(std::span<const RateReport> reports);
std::string manifest_text(const ExperimentConfig& config);

// Minimal reader for the files above: rows of fields, header included.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

// Writes text to path, creating parent directories. Throws FilesystemError.
void write_text_file(const std::filesystem::path& path, std::string_view text);

// distances.csv, rates.csv, lr.csv (2D studies only) and manifest.txt.
void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir);

}  // namespace statfem
