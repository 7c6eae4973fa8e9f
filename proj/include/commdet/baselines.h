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

#ifndef COMMDET_BASELINES_H_
#define COMMDET_BASELINES_H_

#include <cstdint>

#include "commdet/graph.h"
#include "commdet/parallel.h"

namespace commdet {

struct LpParams {
  std::uint64_t seed = 0;
  int max_iterations = 100;
};

struct LpResult {
  Cover cover;
  int sweeps = 0;
  bool converged = false;
};

// Asynchronous label propagation. Every node starts with its own label; each
// sweep visits the nodes in a fresh seeded random order and sets each node's
// label to the most frequent label among its neighbors, breaking ties
// uniformly at random. Stops once every node holds one of its neighborhood's
// most frequent labels, or after max_iterations sweeps. The result is a
// partition of all nodes (isolated nodes form singletons).
LpResult LabelPropagation(const Graph& g, const LpParams& params,
                          const RunContext& ctx = {});

struct CpmParams {
  int k = 3;
};

// Clique percolation. k-cliques are obtained by expanding every maximal
// clique of size >= k into its k-subsets; two k-cliques are adjacent when
// they share k - 1 nodes, and each connected component of that adjacency
// contributes the union of its k-cliques as one community.
//
// Throws ResourceError when the number of expanded k-cliques exceeds
// ctx.clique_cap and std::invalid_argument when k < 3.
Cover CliquePercolation(const Graph& g, const CpmParams& params,
                        const RunContext& ctx = {});

}  // namespace commdet

#endif  // COMMDET_BASELINES_H_
