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

namespace statfem {

// Worker count: STATFEM_THREADS if set and positive, else the hardware
// concurrency (at least 1).
int worker_count();

// Runs body(i) for i in [0, n) on up to worker_count() threads. Each index
// runs at most once; after a failure the exception of the lowest failing
// index is rethrown once all workers stop.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace statfem
