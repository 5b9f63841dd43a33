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

#include "statfem/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <optional>

#include "statfem/errors.hpp"
#include "statfem/exact_prior.hpp"
#include "statfem/fem.hpp"
#include "statfem/ladder.hpp"
#include "statfem/metrics.hpp"
#include "statfem/parallel.hpp"
#include "statfem/posterior.hpp"
#include "statfem/random.hpp"
#include "statfem/sampling.hpp"
#include "statfem/statfem_prior.hpp"

namespace statfem {
namespace {

enum SeedTag : std::uint64_t { kDataSeed = 1, kReferenceSeed = 2, kStatfemSeed = 3 };

ForcingModel forcing_of(const ExperimentConfig& c) {
  ForcingModel m;
  m.sigma_f = c.sigma_f;
  m.length_scale = c.l_f;
  return m;
}

std::string coords(double h, std::optional<double> eps) {
  char buf[96];
  if (eps) {
    std::snprintf(buf, sizeof buf, "h = %.6g, eps = %.6g", h, *eps);
  } else {
    std::snprintf(buf, sizeof buf, "h = %.6g", h);
  }
  return buf;
}

// Runs fn, tagging numerical failures with the ladder coordinates.
template <typename Fn>
auto at_coords(double h, std::optional<double> eps, Fn&& fn) {
  try {
    return fn();
  } catch (const NumericalError& e) {
    throw NumericalError(std::string(e.what()) + " [" + coords(h, eps) + "]");
  }
}

void note(const ProgressFn& progress, const std::string& msg) {
  if (progress) progress(msg);
}

std::vector<Point> sensor_points(const ExperimentConfig& c) {
  if (experiment_dim(c.experiment) == 1) {
    return equispaced_sensors_1d(c.sensor_count, c.sensor_lo, c.sensor_hi);
  }
  const int side = static_cast<int>(std::lround(std::sqrt(c.sensor_count)));
  return equispaced_sensors_2d(side, c.sensor_lo, c.sensor_hi);
}

FemSystem make_system(int n, int dim) {
  return FemSystem(dim == 1 ? build_interval_mesh(n) : build_unit_square_mesh(n));
}

RateReport make_report(const ExperimentConfig& c, std::optional<double> eps, const std::vector<int>& ns,
                       std::vector<double> ws) {
  RateReport r;
  r.experiment = std::string(to_string(c.experiment));
  r.epsilon = eps;
  for (int n : ns) r.h_values.push_back(h_of_cells(n, experiment_dim(c.experiment)));
  r.distances = std::move(ws);
  r.fit = fit_loglog_slope(r.h_values, r.distances);
  return r;
}

SensorSet with_data(const std::vector<Point>& sensors, double eps, const SensorMoments& source,
                    std::uint64_t seed) {
  SensorSet set{sensors, eps, std::nullopt};
  set.values = generate_sensor_data(source, set, seed);
  return set;
}

std::vector<double> sample_max(const GaussianField& field, int n, std::uint64_t seed) {
  return max_functional(sample_field(field, n, seed));
}

std::uint64_t statfem_seed(const ExperimentConfig& c) {
  return c.sample_coupling == SampleCoupling::common ? derive_seed(c.seed, kReferenceSeed)
                                                     : derive_seed(c.seed, kStatfemSeed);
}

// ---------------------------------------------------------------- 1D, exact reference

std::vector<RateReport> run_prior_1d(const ExperimentConfig& c, const ProgressFn& progress) {
  const auto model = forcing_of(c);
  const auto grid = uniform_grid_1d(c.grid_n);
  const auto reference = prepare_gaussian(exact_prior_on_grid(model, grid));
  const auto ns = ladder_cells(c);
  std::vector<double> ws(ns.size());
  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    const double h = h_of_cells(ns[i], 1);
    ws[i] = at_coords(h, std::nullopt, [&] {
      const FemSystem fem = make_system(ns[i], 1);
      const auto kf = assemble_forcing_covariance(fem, model, c.kf_mode);
      return wasserstein2_prepared(reference,
                                   prepare_gaussian(statfem_prior_on_grid(fem, kf, model, grid)));
    });
    note(progress, "n = " + std::to_string(ns[i]) + " done");
  });
  return {make_report(c, std::nullopt, ns, std::move(ws))};
}

std::vector<RateReport> run_posterior_1d(const ExperimentConfig& c, const ProgressFn& progress) {
  const auto model = forcing_of(c);
  const auto grid = uniform_grid_1d(c.grid_n);
  const auto sensors = sensor_points(c);
  const auto exact = exact_prior_with_sensors(model, grid, sensors);
  const std::uint64_t data_seed = derive_seed(c.seed, kDataSeed);

  const int ne = static_cast<int>(c.epsilons.size());
  std::vector<SensorSet> sets;
  std::vector<PreparedGaussian> refs;
  for (double eps : c.epsilons) {
    sets.push_back(with_data(sensors, eps, exact.at_sensors, data_seed));
    refs.push_back(prepare_gaussian(condition(exact.field, exact.at_sensors, sets.back())));
  }

  const auto ns = ladder_cells(c);
  std::vector<std::vector<double>> ws(ne, std::vector<double>(ns.size()));
  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    const double h = h_of_cells(ns[i], 1);
    const auto prior = at_coords(h, std::nullopt, [&] {
      const FemSystem fem = make_system(ns[i], 1);
      const auto kf = assemble_forcing_covariance(fem, model, c.kf_mode);
      return statfem_prior_with_sensors(fem, kf, model, grid, sensors);
    });
    for (int e = 0; e < ne; ++e) {
      ws[e][i] = at_coords(h, c.epsilons[e], [&] {
        return wasserstein2_prepared(
            refs[e], prepare_gaussian(condition(prior.field, prior.at_sensors, sets[e])));
      });
    }
    note(progress, "n = " + std::to_string(ns[i]) + " done");
  });
  std::vector<RateReport> out;
  for (int e = 0; e < ne; ++e) out.push_back(make_report(c, c.epsilons[e], ns, std::move(ws[e])));
  return out;
}

// ---------------------------------------------------------------- 2D, self-convergence

std::vector<RateReport> run_dyadic_2d(const ExperimentConfig& c, const ProgressFn& progress) {
  const auto model = forcing_of(c);
  const auto grid = uniform_grid_2d(c.grid_n);
  const bool posterior = c.experiment == ExperimentKind::posterior_2d;
  const auto bases = ladder_cells(c);
  const auto levels = dyadic_levels(bases);

  std::vector<Point> sensors;
  std::vector<SensorSet> sets;
  std::vector<std::optional<double>> eps_list = {std::nullopt};
  if (posterior) {
    sensors = sensor_points(c);
    const int n_fine = static_cast<int>(std::lround(1.0 / c.fine_h));
    const auto source = at_coords(h_of_cells(n_fine, 2), std::nullopt, [&] {
      const FemSystem fem = make_system(n_fine, 2);
      const auto kf = assemble_forcing_covariance(fem, model, c.kf_mode);
      const auto m = statfem_moments(fem, kf, model, sensors);
      return SensorMoments{m.mean, m.cov, Eigen::MatrixXd(0, sensors.size())};
    });
    note(progress, "data source mesh n = " + std::to_string(n_fine) + " done");
    const std::uint64_t data_seed = derive_seed(c.seed, kDataSeed);
    eps_list.clear();
    for (double eps : c.epsilons) {
      sets.push_back(with_data(sensors, eps, source, data_seed));
      eps_list.push_back(eps);
    }
  }
  const int ne = static_cast<int>(eps_list.size());

  // prepared[level][eps]
  std::vector<std::vector<PreparedGaussian>> prepared(levels.size());
  parallel_for(static_cast<int>(levels.size()), [&](int i) {
    const int n = levels[i];
    const double h = h_of_cells(n, 2);
    auto& slot = prepared[i];
    at_coords(h, std::nullopt, [&] {
      const FemSystem fem = make_system(n, 2);
      const auto kf = assemble_forcing_covariance(fem, model, c.kf_mode);
      if (!posterior) {
        slot.push_back(prepare_gaussian(statfem_prior_on_grid(fem, kf, model, grid)));
        return 0;
      }
      const auto prior = statfem_prior_with_sensors(fem, kf, model, grid, sensors);
      for (int e = 0; e < ne; ++e) {
        slot.push_back(at_coords(h, eps_list[e], [&] {
          return prepare_gaussian(condition(prior.field, prior.at_sensors, sets[e]));
        }));
      }
      return 0;
    });
    note(progress, "level n = " + std::to_string(n) + " done");
  });

  std::map<int, int> index_of;
  for (std::size_t i = 0; i < levels.size(); ++i) index_of[levels[i]] = static_cast<int>(i);

  // Distances between consecutive levels (m, 2m), shared by neighbouring bases.
  std::map<int, std::vector<double>> pair_w;
  std::vector<int> pair_lo;
  for (int b : bases) {
    pair_lo.push_back(b);
    pair_lo.push_back(2 * b);
  }
  std::sort(pair_lo.begin(), pair_lo.end());
  pair_lo.erase(std::unique(pair_lo.begin(), pair_lo.end()), pair_lo.end());
  for (int m : pair_lo) pair_w[m].resize(ne);
  parallel_for(static_cast<int>(pair_lo.size() * ne), [&](int k) {
    const int m = pair_lo[k / ne];
    const int e = k % ne;
    pair_w.at(m)[e] = wasserstein2_prepared(prepared[index_of.at(m)][e], prepared[index_of.at(2 * m)][e]);
  });

  std::vector<RateReport> out;
  for (int e = 0; e < ne; ++e) {
    std::vector<double> ws;
    for (int b : bases) ws.push_back(pair_w[b][e]);
    RateReport r = make_report(c, eps_list[e], bases, ws);
    std::vector<double> ratios;
    for (std::size_t i = 0; i < bases.size(); ++i) {
      const double w1 = pair_w[bases[i]][e];
      const double w2 = pair_w[2 * bases[i]][e];
      ratios.push_back(w1 / w2);
      r.lr_sequence.push_back({r.h_values[i], w1 / w2, dyadic_log_ratio(w1, w2),
                               std::numeric_limits<double>::quiet_NaN()});
    }
    const auto smoothed = smooth_lr(r.h_values, ratios, c.lr_cutoff);
    std::size_t s = 0;
    for (auto& p : r.lr_sequence) {
      if (p.h <= c.lr_cutoff) p.smoothed = smoothed[s++];
    }
    r.final_smoothed_lr = smoothed.back();
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------- max functional

std::vector<RateReport> run_max_prior_1d(const ExperimentConfig& c, const ProgressFn& progress) {
  const auto model = forcing_of(c);
  const auto grid = uniform_grid_1d(c.grid_n);
  const auto reference = sample_max(exact_prior_on_grid(model, grid), c.n_samples,
                                    derive_seed(c.seed, kReferenceSeed));
  const std::uint64_t sf_seed = statfem_seed(c);
  const auto ns = ladder_cells(c);
  std::vector<double> ws(ns.size());
  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    const double h = h_of_cells(ns[i], 1);
    ws[i] = at_coords(h, std::nullopt, [&] {
      const FemSystem fem = make_system(ns[i], 1);
      const auto kf = assemble_forcing_covariance(fem, model, c.kf_mode);
      const auto prior = statfem_prior_on_grid(fem, kf, model, grid);
      return wasserstein2_empirical_1d(reference, sample_max(prior, c.n_samples, sf_seed));
    });
    note(progress, "n = " + std::to_string(ns[i]) + " done");
  });
  return {make_report(c, std::nullopt, ns, std::move(ws))};
}

std::vector<RateReport> run_max_posterior_1d(const ExperimentConfig& c, const ProgressFn& progress) {
  const auto model = forcing_of(c);
  const auto grid = uniform_grid_1d(c.grid_n);
  const auto sensors = sensor_points(c);
  const auto exact = exact_prior_with_sensors(model, grid, sensors);
  const std::uint64_t data_seed = derive_seed(c.seed, kDataSeed);
  const std::uint64_t ref_seed = derive_seed(c.seed, kReferenceSeed);
  const std::uint64_t sf_seed = statfem_seed(c);

  const int ne = static_cast<int>(c.epsilons.size());
  std::vector<SensorSet> sets;
  std::vector<std::vector<double>> refs;
  for (double eps : c.epsilons) {
    sets.push_back(with_data(sensors, eps, exact.at_sensors, data_seed));
    refs.push_back(sample_max(condition(exact.field, exact.at_sensors, sets.back()), c.n_samples,
                              ref_seed));
  }

  const auto ns = ladder_cells(c);
  std::vector<std::vector<double>> ws(ne, std::vector<double>(ns.size()));
  parallel_for(static_cast<int>(ns.size()), [&](int i) {
    const double h = h_of_cells(ns[i], 1);
    const auto prior = at_coords(h, std::nullopt, [&] {
      const FemSystem fem = make_system(ns[i], 1);
      const auto kf = assemble_forcing_covariance(fem, model, c.kf_mode);
      return statfem_prior_with_sensors(fem, kf, model, grid, sensors);
    });
    for (int e = 0; e < ne; ++e) {
      ws[e][i] = at_coords(h, c.epsilons[e], [&] {
        const auto post = condition(prior.field, prior.at_sensors, sets[e]);
        return wasserstein2_empirical_1d(refs[e], sample_max(post, c.n_samples, sf_seed));
      });
    }
    note(progress, "n = " + std::to_string(ns[i]) + " done");
  });
  std::vector<RateReport> out;
  for (int e = 0; e < ne; ++e) out.push_back(make_report(c, c.epsilons[e], ns, std::move(ws[e])));
  return out;
}

}  // namespace

std::vector<int> ladder_cells(const ExperimentConfig& c) {
  const int dim = experiment_dim(c.experiment);
  const auto& l = c.h_ladder;
  switch (l.kind) {
    case LadderSpec::Kind::geometric:
      return geometric_cell_ladder(l.h_max, l.h_min, l.count, dim == 1 ? c.grid_n - 1 : 0);
    case LadderSpec::Kind::dyadic:
      return dyadic_base_ladder(l.n_min, l.n_max);
    case LadderSpec::Kind::list:
      return cells_from_h_values(l.values, dim);
  }
  return {};
}

ExperimentResult run_experiment(const ExperimentConfig& config, const ProgressFn& progress) {
  validate_config(config);
  ExperimentResult result;
  result.config = config;
  switch (config.experiment) {
    case ExperimentKind::prior_1d:
      result.reports = run_prior_1d(config, progress);
      break;
    case ExperimentKind::posterior_1d:
      result.reports = run_posterior_1d(config, progress);
      break;
    case ExperimentKind::prior_2d:
    case ExperimentKind::posterior_2d:
      result.reports = run_dyadic_2d(config, progress);
      break;
    case ExperimentKind::max_prior_1d:
      result.reports = run_max_prior_1d(config, progress);
      break;
    case ExperimentKind::max_posterior_1d:
      result.reports = run_max_posterior_1d(config, progress);
      break;
  }
  return result;
}

}  // namespace statfem
