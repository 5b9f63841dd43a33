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

#include "statfem/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "statfem/errors.hpp"
#include "statfem/random.hpp"

namespace statfem {
namespace {

std::string epsilon_field(const RateReport& r) { return r.epsilon ? format_double(*r.epsilon) : ""; }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string distances_csv(std::span<const RateReport> reports) {
  std::string out = "experiment,epsilon,h,wasserstein\n";
  for (const auto& r : reports) {
    for (std::size_t i = 0; i < r.h_values.size(); ++i) {
      out += r.experiment + "," + epsilon_field(r) + "," + format_double(r.h_values[i]) + "," +
             format_double(r.distances[i]) + "\n";
    }
  }
  return out;
}

std::string rates_csv(std::span<const RateReport> reports) {
  std::string out = "experiment,epsilon,slope,intercept,final_smoothed_lr\n";
  for (const auto& r : reports) {
    out += r.experiment + "," + epsilon_field(r) + "," + format_double(r.fit.slope) + "," +
           format_double(r.fit.intercept) + "," +
           (r.final_smoothed_lr ? format_double(*r.final_smoothed_lr) : "") + "\n";
  }
  return out;
}

std::string lr_csv(std::span<const RateReport> reports) {
  std::string out = "experiment,epsilon,h,ratio,lr,smoothed_lr\n";
  for (const auto& r : reports) {
    for (const auto& p : r.lr_sequence) {
      out += r.experiment + "," + epsilon_field(r) + "," + format_double(p.h) + "," +
             format_double(p.ratio) + "," + format_double(p.lr) + "," +
             (std::isnan(p.smoothed) ? "" : format_double(p.smoothed)) + "\n";
    }
  }
  return out;
}

std::string manifest_text(const ExperimentConfig& config) {
  const std::string canonical = canonical_text(config);
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(fnv1a64(canonical)));
  std::string out;
  out += "tool = statfem-lab\n";
  out += "version = " STATFEM_VERSION_STRING "\n";
  out += "experiment = " + std::string(to_string(config.experiment)) + "\n";
  out += "config_hash = fnv1a64:" + std::string(hash) + "\n";
  out += "rng = " + std::string(kRngAlgorithm) + "\n";
  out += "\n[config]\n" + canonical;
  return out;
}

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    pos = nl + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      fields.emplace_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(fields));
  }
  return rows;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw FilesystemError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw FilesystemError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw FilesystemError("failed writing " + path.string());
}

void write_outputs(const ExperimentResult& result, const std::filesystem::path& dir) {
  write_text_file(dir / "distances.csv", distances_csv(result.reports));
  write_text_file(dir / "rates.csv", rates_csv(result.reports));
  if (experiment_is_dyadic(result.config.experiment)) {
    write_text_file(dir / "lr.csv", lr_csv(result.reports));
  }
  write_text_file(dir / "manifest.txt", manifest_text(result.config));
}

}  // namespace statfem
