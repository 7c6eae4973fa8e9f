// Copyright 2026 The commdet Authors.
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

#ifndef COMMDET_PARALLEL_H_
#define COMMDET_PARALLEL_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

namespace commdet {

// Execution settings shared by every algorithm entry point. Results never
// depend on `threads`; it only caps internal parallelism.
struct RunContext {
  using Clock = std::chrono::steady_clock;

  int threads = 1;
  // Cap on materialized cliques: maximal cliques during enumeration,
  // k-cliques during clique percolation.
  std::uint64_t clique_cap = 10'000'000;
  std::optional<Clock::time_point> deadline;

  static RunContext WithTimeout(double seconds, int threads = 1);

  // Throws TimeoutError once the deadline has passed.
  void CheckDeadline() const;
};

// Runs fn(i) for every i in [0, count) on up to ctx.threads workers. The
// first exception thrown by any call stops the remaining work and is
// rethrown on the calling thread.
void ParallelFor(const RunContext& ctx, std::size_t count,
                 const std::function<void(std::size_t)>& fn);

}  // namespace commdet

#endif  // COMMDET_PARALLEL_H_
