// Copyright 2026 The gsroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace gsr {

/// Worker count: GSR_THREADS if set and positive, otherwise the hardware concurrency (at least 1).
size_t worker_count();

/// Splits [0, n) into contiguous chunks, one per worker, and runs body(begin, end, worker) on each.
/// The first exception thrown by any worker is rethrown after all workers join.
void parallel_for(size_t n, size_t workers, const std::function<void(size_t, size_t, size_t)> &body);

}  // namespace gsr
