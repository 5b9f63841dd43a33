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
#include <random>
#include <string_view>

#include <Eigen/Dense>

namespace statfem {

// Recorded in run manifests. Bump the suffix whenever the normal stream for a
// given (seed, stream) changes.
inline constexpr std::string_view kRngAlgorithm = "mt19937_64+splitmix64-seed+box-muller/v1";

std::uint64_t splitmix64(std::uint64_t x);

// Child seed for an independent purpose (data, reference samples, ...).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag);

// Standard normal variates from mt19937_64. The Box-Muller transform is done
// here rather than by std::normal_distribution so the stream does not depend
// on the standard library implementation.
class NormalStream {
 public:
  NormalStream(std::uint64_t seed, std::uint64_t stream);

  double next();
  Eigen::VectorXd vector(int n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace statfem
