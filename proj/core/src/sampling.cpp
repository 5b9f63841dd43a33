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

#include "statfem/sampling.hpp"

#include <string>

#include "statfem/errors.hpp"
#include "statfem/metrics.hpp"
#include "statfem/random.hpp"

namespace statfem {

Eigen::MatrixXd sampling_factor(const Eigen::MatrixXd& cov) { return sym_psd_sqrt(cov).sqrt; }

SampleBatch sample_field(const GaussianField& field, int n_samples, std::uint64_t seed,
                         std::string source) {
  if (n_samples < 1) throw InvalidArgument("sample_field: n_samples must be >= 1");
  const int n = field.size();
  Eigen::MatrixXd z(n, n_samples);
  for (int j = 0; j < n_samples; ++j) {
    NormalStream stream(seed, static_cast<std::uint64_t>(j));
    z.col(j) = stream.vector(n);
  }
  SampleBatch batch;
  batch.seed = seed;
  batch.source = std::move(source);
  batch.trajectories = (sampling_factor(field.cov) * z).transpose();
  batch.trajectories.rowwise() += field.mean.transpose();
  return batch;
}

std::vector<double> max_functional(const SampleBatch& batch) {
  const auto& t = batch.trajectories;
  if (t.rows() == 0 || t.cols() == 0) throw InvalidArgument("max_functional: empty batch");
  std::vector<double> out(t.rows());
  for (Eigen::Index j = 0; j < t.rows(); ++j) out[j] = t.row(j).maxCoeff();
  return out;
}

}  // namespace statfem
