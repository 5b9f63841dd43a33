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

#include <span>
#include <vector>

namespace statfem {

// `count` distinct cell counts n (h = 1/n) spread roughly geometrically over
// [h_min, h_max], returned with n increasing. Counts that are multiples of
// `avoid_multiple` are skipped (0 disables): when N - 1 divides n every
// point of an N-point grid is a mesh node, and 1D P1 nodal exactness then
// makes the distance to the exact prior collapse.
std::vector<int> geometric_cell_ladder(double h_max, double h_min, int count, int avoid_multiple = 0);

// Base counts n_min..n_max; each is paired with 2n and 4n.
std::vector<int> dyadic_base_ladder(int n_min, int n_max);

// Every level n, 2n, 4n of a dyadic ladder, sorted and deduplicated.
std::vector<int> dyadic_levels(std::span<const int> bases);

// Cell counts for explicit h values: n = 1/h in 1D, sqrt(2)/h in 2D. Throws
// InvalidArgument when an h does not match an integer n to 1e-9.
std::vector<int> cells_from_h_values(std::span<const double> hs, int dim);

double h_of_cells(int n, int dim);

}  // namespace statfem
