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

#include "statfem/ladder.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "statfem/errors.hpp"

namespace statfem {

std::vector<int> geometric_cell_ladder(double h_max, double h_min, int count, int avoid_multiple) {
  if (!(h_min > 0.0) || !(h_max > h_min)) throw InvalidArgument("ladder: need 0 < h_min < h_max");
  if (count < 2) throw InvalidArgument("ladder: need at least two levels");
  const int lo = std::max(2, static_cast<int>(std::ceil(1.0 / h_max - 1e-9)));
  const int hi = static_cast<int>(std::floor(1.0 / h_min + 1e-9));
  std::vector<int> cand;
  for (int n = lo; n <= hi; ++n) {
    if (avoid_multiple > 0 && n % avoid_multiple == 0) continue;
    cand.push_back(n);
  }
  if (static_cast<int>(cand.size()) < count) {
    throw InvalidArgument("ladder: only " + std::to_string(cand.size()) +
                          " admissible cell counts in the h range, " + std::to_string(count) +
                          " requested");
  }
  const double a = std::log(cand.front());
  const double b = std::log(cand.back());
  std::vector<int> idx(count);
  for (int k = 0; k < count; ++k) {
    const double target = std::exp(a + (b - a) * k / (count - 1));
    int best = 0;
    for (int i = 1; i < static_cast<int>(cand.size()); ++i) {
      if (std::abs(cand[i] - target) < std::abs(cand[best] - target)) best = i;
    }
    idx[k] = best;
  }
  // Make the picks distinct: push forward, then cap from the top.
  for (int k = 1; k < count; ++k) idx[k] = std::max(idx[k], idx[k - 1] + 1);
  idx[count - 1] = std::min(idx[count - 1], static_cast<int>(cand.size()) - 1);
  for (int k = count - 2; k >= 0; --k) idx[k] = std::min(idx[k], idx[k + 1] - 1);
  std::vector<int> out(count);
  for (int k = 0; k < count; ++k) out[k] = cand[idx[k]];
  return out;
}

std::vector<int> dyadic_base_ladder(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) throw InvalidArgument("dyadic ladder: need 2 <= n_min <= n_max");
  std::vector<int> out;
  for (int n = n_min; n <= n_max; ++n) out.push_back(n);
  return out;
}

std::vector<int> dyadic_levels(std::span<const int> bases) {
  std::vector<int> out;
  for (int n : bases) {
    out.push_back(n);
    out.push_back(2 * n);
    out.push_back(4 * n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double h_of_cells(int n, int dim) { return (dim == 1 ? 1.0 : std::sqrt(2.0)) / n; }

std::vector<int> cells_from_h_values(std::span<const double> hs, int dim) {
  std::vector<int> out;
  for (double h : hs) {
    if (!(h > 0.0)) throw InvalidArgument("h values must be positive");
    const double n = h_of_cells(1, dim) / h;
    const long rounded = std::lround(n);
    if (rounded < 2 || std::abs(n - rounded) > 1e-9 * n) {
      throw InvalidArgument("h = " + std::to_string(h) + " is not realisable on a uniform mesh");
    }
    out.push_back(static_cast<int>(rounded));
  }
  return out;
}

}  // namespace statfem
