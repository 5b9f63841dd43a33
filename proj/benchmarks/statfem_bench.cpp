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

#include <benchmark/benchmark.h>

#include "statfem/exact_prior.hpp"
#include "statfem/metrics.hpp"
#include "statfem/posterior.hpp"
#include "statfem/sampling.hpp"
#include "statfem/statfem_prior.hpp"

namespace {

using namespace statfem;

void BM_AssembleStiffness2D(benchmark::State& state) {
  const Mesh mesh = build_unit_square_mesh(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble_stiffness(mesh, constant_field(1.0)));
}
BENCHMARK(BM_AssembleStiffness2D)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ForcingCovariance(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const FemSystem fem(dim == 1 ? build_interval_mesh(n) : build_unit_square_mesh(n));
  const ForcingModel model;
  for (auto _ : state) {
    benchmark::DoNotOptimize(assemble_forcing_covariance(fem, model, default_kf_mode(dim)));
  }
}
BENCHMARK(BM_ForcingCovariance)->Args({1, 50})->Args({2, 16})->Args({2, 32})
    ->Unit(benchmark::kMillisecond);

void BM_StatFemPrior2D(benchmark::State& state) {
  const FemSystem fem(build_unit_square_mesh(static_cast<int>(state.range(0))));
  const ForcingModel model;
  const auto kf = assemble_forcing_covariance(fem, model, KfMode::nodal_mass);
  const auto grid = uniform_grid_2d(41);
  for (auto _ : state) benchmark::DoNotOptimize(statfem_prior_on_grid(fem, kf, model, grid));
}
BENCHMARK(BM_StatFemPrior2D)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_ExactPrior1D(benchmark::State& state) {
  const auto grid = uniform_grid_1d(static_cast<int>(state.range(0)));
  ForcingModel model;
  for (auto _ : state) benchmark::DoNotOptimize(exact_prior_on_grid(model, grid));
}
BENCHMARK(BM_ExactPrior1D)->Arg(41)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_Wasserstein(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto grid = n > 200 ? uniform_grid_2d(static_cast<int>(std::lround(std::sqrt(n))))
                            : uniform_grid_1d(n);
  const auto a = prepare_gaussian(GaussianField{grid, Eigen::VectorXd::Zero(grid->size()),
                                                Eigen::MatrixXd::Identity(grid->size(), grid->size())});
  Eigen::MatrixXd c = Eigen::MatrixXd::Random(grid->size(), grid->size());
  c = c * c.transpose();
  const auto b = prepare_gaussian(GaussianField{grid, Eigen::VectorXd::Ones(grid->size()), c});
  for (auto _ : state) benchmark::DoNotOptimize(wasserstein2_prepared(a, b));
}
BENCHMARK(BM_Wasserstein)->Arg(51)->Arg(1681)->Unit(benchmark::kMillisecond);

void BM_SampleField(benchmark::State& state) {
  const auto field = exact_prior_on_grid(ForcingModel{}, uniform_grid_1d(100));
  for (auto _ : state) benchmark::DoNotOptimize(sample_field(field, 1000, 7));
}
BENCHMARK(BM_SampleField)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
