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

#ifndef COMMDET_CLIQUE_H_
#define COMMDET_CLIQUE_H_

#include <cstddef>
#include <vector>

#include "commdet/graph.h"
#include "commdet/parallel.h"

namespace commdet {

// Maximal cliques of a graph with at least `min_size` members, in canonical
// cover order (largest first, ties by sorted external ids).
struct CliqueSet {
  std::vector<Community> cliques;
  int min_size = 1;
};

// Enumerates every maximal clique of size >= min_size exactly once.
//
// Bron-Kerbosch with Tomita pivoting, driven by a degeneracy ordering: each
// vertex v roots one search whose candidates are v's neighbors later in the
// order and whose exclusion set is its earlier neighbors. Roots are
// independent and run in parallel under ctx.threads; the result is sorted
// afterwards, so it does not depend on the thread count.
//
// Throws ResourceError if more than ctx.clique_cap cliques are found and
// TimeoutError if ctx.deadline passes. Throws std::invalid_argument if
// min_size < 1.
CliqueSet EnumerateMaximalCliques(const Graph& g, int min_size,
                                  const RunContext& ctx = {});

// Greedy seed selection. Cliques are taken in the given (canonical) order; a
// clique is discarded iff some already kept clique k shares more than
// threshold * min(|c|, |k|) of its nodes, otherwise it is kept. Discarded
// cliques never block later ones.
CliqueSet FilterOverlapping(const CliqueSet& cs, double overlapping_threshold);

// Whether `c` is a clique of `g` that no outside node extends.
bool IsMaximalClique(const Graph& g, const Community& c);

// Degeneracy (smallest-last) ordering: order[i] is the i-th vertex removed
// when repeatedly deleting a minimum-degree vertex.
std::vector<NodeId> DegeneracyOrder(const Graph& g);

}  // namespace commdet

#endif  // COMMDET_CLIQUE_H_
