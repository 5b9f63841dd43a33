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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "statfem/errors.hpp"

namespace statfem {
namespace {

constexpr std::pair<ExperimentKind, std::string_view> kKindNames[] = {
    {ExperimentKind::prior_1d, "prior-1d"},
    {ExperimentKind::posterior_1d, "posterior-1d"},
    {ExperimentKind::prior_2d, "prior-2d"},
    {ExperimentKind::posterior_2d, "posterior-2d"},
    {ExperimentKind::max_prior_1d, "max-prior-1d"},
    {ExperimentKind::max_posterior_1d, "max-posterior-1d"},
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::optional<double> to_double(std::string_view s) {
  s = trim(s);
  // "1/64" style fractions are accepted for mesh widths.
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = to_double(s.substr(0, slash));
    const auto den = to_double(s.substr(slash + 1));
    if (!num || !den || *den == 0.0) return std::nullopt;
    return *num / *den;
  }
  double v = 0.0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || s.empty()) return std::nullopt;
  return v;
}

template <typename Int>
std::optional<Int> to_int(std::string_view s) {
  s = trim(s);
  Int v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end || s.empty()) return std::nullopt;
  return v;
}

std::optional<std::vector<double>> to_list(std::string_view s) {
  std::vector<double> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    const auto item = to_double(s.substr(start, comma - start));
    if (!item) return std::nullopt;
    out.push_back(*item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// geometric(h_max, h_min, count) | dyadic(n_min, n_max) | list(h, ...) | h, h, ...
std::optional<LadderSpec> to_ladder(std::string_view s) {
  s = trim(s);
  LadderSpec out;
  const auto open = s.find('(');
  if (open == std::string_view::npos) {
    auto values = to_list(s);
    if (!values || values->empty()) return std::nullopt;
    out.kind = LadderSpec::Kind::list;
    out.values = std::move(*values);
    return out;
  }
  if (s.back() != ')') return std::nullopt;
  const auto name = trim(s.substr(0, open));
  const auto args = to_list(s.substr(open + 1, s.size() - open - 2));
  if (!args) return std::nullopt;
  auto is_int = [](double v) { return std::floor(v) == v; };
  if (name == "geometric" && args->size() == 3 && is_int((*args)[2])) {
    out.kind = LadderSpec::Kind::geometric;
    out.h_max = (*args)[0];
    out.h_min = (*args)[1];
    out.count = static_cast<int>((*args)[2]);
    return out;
  }
  if (name == "dyadic" && args->size() == 2 && is_int((*args)[0]) && is_int((*args)[1])) {
    out.kind = LadderSpec::Kind::dyadic;
    out.n_min = static_cast<int>((*args)[0]);
    out.n_max = static_cast<int>((*args)[1]);
    return out;
  }
  if (name == "list" && !args->empty()) {
    out.kind = LadderSpec::Kind::list;
    out.values = *args;
    return out;
  }
  return std::nullopt;
}

std::string join_list(const std::vector<double>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt_double(v[i]);
  }
  return out;
}

LadderSpec geometric(double h_max, double h_min, int count) {
  LadderSpec out;
  out.h_max = h_max;
  out.h_min = h_min;
  out.count = count;
  return out;
}

[[noreturn]] void throw_errors(const std::vector<std::string>& errors) {
  std::string msg = "invalid configuration:";
  for (const auto& e : errors) msg += "\n  " + e;
  throw ConfigError(msg);
}

}  // namespace

std::string_view to_string(ExperimentKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<ExperimentKind> parse_experiment_kind(std::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == trim(name)) return k;
  }
  return std::nullopt;
}

int experiment_dim(ExperimentKind kind) {
  return kind == ExperimentKind::prior_2d || kind == ExperimentKind::posterior_2d ? 2 : 1;
}

bool experiment_is_dyadic(ExperimentKind kind) { return experiment_dim(kind) == 2; }

bool experiment_has_sensors(ExperimentKind kind) {
  return kind == ExperimentKind::posterior_1d || kind == ExperimentKind::posterior_2d ||
         kind == ExperimentKind::max_posterior_1d;
}

bool experiment_is_sampled(ExperimentKind kind) {
  return kind == ExperimentKind::max_prior_1d || kind == ExperimentKind::max_posterior_1d;
}

std::string_view to_string(SampleCoupling coupling) {
  return coupling == SampleCoupling::independent ? "independent" : "common";
}

std::string to_string(const LadderSpec& ladder) {
  switch (ladder.kind) {
    case LadderSpec::Kind::geometric:
      return "geometric(" + fmt_double(ladder.h_max) + ", " + fmt_double(ladder.h_min) + ", " +
             std::to_string(ladder.count) + ")";
    case LadderSpec::Kind::dyadic:
      return "dyadic(" + std::to_string(ladder.n_min) + ", " + std::to_string(ladder.n_max) + ")";
    case LadderSpec::Kind::list:
      return "list(" + join_list(ladder.values) + ")";
  }
  return {};
}

ExperimentConfig default_config(ExperimentKind kind) {
  ExperimentConfig c;
  c.experiment = kind;
  c.kf_mode = default_kf_mode(experiment_dim(kind));
  switch (kind) {
    case ExperimentKind::prior_1d:
      c.grid_n = 51;
      c.h_ladder = geometric(0.25, 0.02, 30);
      break;
    case ExperimentKind::posterior_1d:
      c.grid_n = 41;
      c.h_ladder = geometric(0.25, 0.025, 28);
      c.sensor_count = 10;
      c.epsilons = {5e-5, 1e-4, 1e-2, 1e-1};
      break;
    case ExperimentKind::prior_2d:
      c.grid_n = 41;
      c.h_ladder.kind = LadderSpec::Kind::dyadic;
      break;
    case ExperimentKind::posterior_2d:
      c.grid_n = 41;
      c.h_ladder.kind = LadderSpec::Kind::dyadic;
      c.sensor_count = 25;
      c.epsilons = {1e-3};
      break;
    case ExperimentKind::max_prior_1d:
      c.l_f = 0.01;
      c.grid_n = 100;
      c.h_ladder = geometric(0.25, 0.02, 30);
      break;
    case ExperimentKind::max_posterior_1d:
      c.l_f = 0.01;
      c.grid_n = 41;
      c.h_ladder = geometric(0.25, 0.02, 30);
      c.sensor_count = 10;
      c.epsilons = {1e-2, 1e-3, 5e-4, 1e-4};
      break;
  }
  return c;
}

ExperimentConfig parse_config(std::string_view text, std::optional<ExperimentKind> kind) {
  std::map<std::string, std::pair<std::string, int>> entries;
  std::vector<std::string> errors;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      errors.push_back("line " + std::to_string(line_no) + ": expected key = value");
      continue;
    }
    std::string key(trim(line.substr(0, eq)));
    std::string value(trim(line.substr(eq + 1)));
    if (!entries.emplace(key, std::make_pair(value, line_no)).second) {
      errors.push_back(key + ": given more than once (line " + std::to_string(line_no) + ")");
    }
  }

  if (!kind) {
    const auto it = entries.find("experiment");
    if (it == entries.end()) {
      errors.push_back("experiment: missing");
    } else if (!(kind = parse_experiment_kind(it->second.first))) {
      errors.push_back("experiment: unknown experiment '" + it->second.first + "'");
    }
  } else if (const auto it = entries.find("experiment");
             it != entries.end() && !parse_experiment_kind(it->second.first)) {
    errors.push_back("experiment: unknown experiment '" + it->second.first + "'");
  }
  if (!kind) throw_errors(errors);

  ExperimentConfig c = default_config(*kind);
  for (const auto& [key, entry] : entries) {
    const std::string& v = entry.first;
    auto bad = [&](const std::string& what) { errors.push_back(key + ": " + what + " (got '" + v + "')"); };
    auto set_double = [&](double& field) {
      if (auto d = to_double(v)) field = *d; else bad("expected a number");
    };
    auto set_int = [&](int& field) {
      if (auto i = to_int<int>(v)) field = *i; else bad("expected an integer");
    };
    if (key == "experiment") {
      continue;
    } else if (key == "sigma_f") {
      set_double(c.sigma_f);
    } else if (key == "l_f") {
      set_double(c.l_f);
    } else if (key == "h_ladder") {
      if (auto l = to_ladder(v)) c.h_ladder = *l;
      else bad("expected geometric(h_max, h_min, count), dyadic(n_min, n_max) or a list of h values");
    } else if (key == "grid_n") {
      set_int(c.grid_n);
    } else if (key == "sensor_count") {
      set_int(c.sensor_count);
    } else if (key == "sensor_box") {
      auto l = to_list(v);
      if (l && l->size() == 2) {
        c.sensor_lo = (*l)[0];
        c.sensor_hi = (*l)[1];
      } else {
        bad("expected lo, hi");
      }
    } else if (key == "epsilons") {
      if (auto l = to_list(v)) c.epsilons = *l; else bad("expected a comma-separated list");
    } else if (key == "n_samples") {
      set_int(c.n_samples);
    } else if (key == "seed") {
      if (auto s = to_int<std::uint64_t>(v)) c.seed = *s; else bad("expected a non-negative integer");
    } else if (key == "kf_mode") {
      if (v == "exact-quadrature") c.kf_mode = KfMode::exact_quadrature;
      else if (v == "nodal-mass") c.kf_mode = KfMode::nodal_mass;
      else bad("expected exact-quadrature or nodal-mass");
    } else if (key == "fine_h") {
      set_double(c.fine_h);
    } else if (key == "output_dir") {
      c.output_dir = v;
    } else if (key == "lr_cutoff") {
      set_double(c.lr_cutoff);
    } else if (key == "sample_coupling") {
      if (v == "independent") c.sample_coupling = SampleCoupling::independent;
      else if (v == "common") c.sample_coupling = SampleCoupling::common;
      else bad("expected independent or common");
    } else {
      errors.push_back(key + ": unknown key (line " + std::to_string(entry.second) + ")");
    }
  }
  for (auto& e : config_errors(c)) errors.push_back(std::move(e));
  if (!errors.empty()) throw_errors(errors);
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path, std::optional<ExperimentKind> kind) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), kind);
}

std::vector<std::string> config_errors(const ExperimentConfig& c) {
  std::vector<std::string> e;
  const int dim = experiment_dim(c.experiment);
  if (!(c.sigma_f > 0.0)) e.push_back("sigma_f: must be positive");
  if (!(c.l_f > 0.0)) e.push_back("l_f: must be positive");
  if (c.grid_n < 2) e.push_back("grid_n: must be at least 2");
  if (dim == 1 && c.grid_n > 2000) e.push_back("grid_n: at most 2000 points in 1D");
  if (dim == 2 && c.grid_n > 81) e.push_back("grid_n: at most 81 points per side in 2D");

  const auto& l = c.h_ladder;
  switch (l.kind) {
    case LadderSpec::Kind::geometric:
      if (dim == 2) e.push_back("h_ladder: 2D experiments need a dyadic ladder");
      if (!(l.h_min > 0.0 && l.h_max > l.h_min && l.h_max <= 0.5)) {
        e.push_back("h_ladder: need 0 < h_min < h_max <= 0.5");
      }
      if (l.count < 2) e.push_back("h_ladder: need at least two levels");
      break;
    case LadderSpec::Kind::dyadic:
      if (dim == 1) e.push_back("h_ladder: dyadic ladders are for 2D experiments");
      if (l.n_min < 2 || l.n_max < l.n_min) e.push_back("h_ladder: need 2 <= n_min <= n_max");
      // Finest level is 4 * n_max cells per side; past 120 the dense K_F does not fit.
      if (4 * l.n_max > 120) e.push_back("h_ladder: finest level 4*n_max exceeds 120 cells per side");
      break;
    case LadderSpec::Kind::list:
      if (dim == 2) e.push_back("h_ladder: 2D experiments need a dyadic ladder");
      if (l.values.size() < 2) e.push_back("h_ladder: need at least two h values");
      for (std::size_t i = 0; i < l.values.size(); ++i) {
        if (!(l.values[i] > 0.0 && l.values[i] <= 0.5)) e.push_back("h_ladder: h values must be in (0, 0.5]");
        if (i > 0 && !(l.values[i] < l.values[i - 1])) e.push_back("h_ladder: h values must be strictly decreasing");
        const double n = 1.0 / l.values[i];
        if (std::abs(n - std::round(n)) > 1e-9 * n) e.push_back("h_ladder: h = " + fmt_double(l.values[i]) + " is not 1/n");
      }
      break;
  }

  if (experiment_has_sensors(c.experiment)) {
    if (c.sensor_count < 1) e.push_back("sensor_count: must be at least 1");
    if (dim == 2) {
      const int side = static_cast<int>(std::lround(std::sqrt(c.sensor_count)));
      if (side * side != c.sensor_count) e.push_back("sensor_count: must be a perfect square in 2D");
    }
    if (!(c.sensor_lo > 0.0 && c.sensor_hi < 1.0 && c.sensor_lo < c.sensor_hi)) {
      e.push_back("sensor_box: need 0 < lo < hi < 1");
    }
    if (c.epsilons.empty()) e.push_back("epsilons: at least one noise level required");
    for (double eps : c.epsilons) {
      if (!(eps > 0.0)) e.push_back("epsilons: noise levels must be positive");
    }
  }
  if (experiment_is_sampled(c.experiment) && c.n_samples < 2) e.push_back("n_samples: must be at least 2");
  if (c.experiment == ExperimentKind::posterior_2d) {
    if (!(c.fine_h > 0.0 && c.fine_h <= 0.5)) {
      e.push_back("fine_h: must be in (0, 0.5]");
    } else {
      const double n = 1.0 / c.fine_h;
      if (std::abs(n - std::round(n)) > 1e-9 * n) e.push_back("fine_h: must be 1/n for an integer n");
    }
  }
  if (dim == 2 && !(c.lr_cutoff > 0.0)) e.push_back("lr_cutoff: must be positive");
  if (c.output_dir.empty()) e.push_back("output_dir: must not be empty");
  return e;
}

void validate_config(const ExperimentConfig& config) {
  const auto errors = config_errors(config);
  if (!errors.empty()) throw_errors(errors);
}

std::string canonical_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "experiment = " << to_string(c.experiment) << '\n'
      << "sigma_f = " << fmt_double(c.sigma_f) << '\n'
      << "l_f = " << fmt_double(c.l_f) << '\n'
      << "h_ladder = " << to_string(c.h_ladder) << '\n'
      << "grid_n = " << c.grid_n << '\n'
      << "sensor_count = " << c.sensor_count << '\n'
      << "sensor_box = " << fmt_double(c.sensor_lo) << ", " << fmt_double(c.sensor_hi) << '\n'
      << "epsilons = " << join_list(c.epsilons) << '\n'
      << "n_samples = " << c.n_samples << '\n'
      << "seed = " << c.seed << '\n'
      << "kf_mode = " << to_string(c.kf_mode) << '\n'
      << "fine_h = " << fmt_double(c.fine_h) << '\n'
      << "lr_cutoff = " << fmt_double(c.lr_cutoff) << '\n'
      << "sample_coupling = " << to_string(c.sample_coupling) << '\n';
  return out.str();
}

void apply_full_range(ExperimentConfig& config) {
  if (experiment_dim(config.experiment) != 2) return;
  config.h_ladder.kind = LadderSpec::Kind::dyadic;
  config.h_ladder.n_min = 3;
  config.h_ladder.n_max = 30;
  config.fine_h = 1.0 / 120;
}

}  // namespace statfem
