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

#ifndef COMMDET_CAA_H_
#define COMMDET_CAA_H_

#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "commdet/graph.h"
#include "commdet/parallel.h"

namespace commdet {

// Clique augmentation: seed communities are maximal cliques, thinned by the
// overlapping threshold, then grown by admitting neighbors that are tightly
// connected to the community.
struct CaaParams {
  static constexpr int kUnboundedRounds = std::numeric_limits<int>::max();

  int min_clique_size = 3;
  double overlapping_threshold = 0.0;
  double growing_threshold = 0.7;
  int max_rounds = kUnboundedRounds;

  // Throws std::invalid_argument on out-of-range fields.
  void Validate() const;
};

// Grows `seed` in rounds. Each round takes a snapshot of the community (size
// s), and admits, all at once, every outside node with at least
// growing_threshold * s neighbors inside the snapshot. Growth stops after a
// round that admits nobody or after max_rounds rounds. The number of rounds
// that admitted at least one node is stored in `rounds` when non-null.
//
// Throws std::invalid_argument if `seed` is not a clique of `g` or the
// threshold lies outside (0, 1].
Community GrowCommunity(const Graph& g, const Community& seed,
                        double growing_threshold,
                        int max_rounds = CaaParams::kUnboundedRounds,
                        int* rounds = nullptr);

struct CaaStats {
  std::size_t maximal_cliques = 0;
  std::size_t seeds = 0;
  std::size_t duplicates_merged = 0;
  // growth rounds -> number of seeds that took that many rounds
  std::map<int, std::size_t> rounds_histogram;
};

struct CaaResult {
  Cover cover;
  CaaStats stats;
};

// Grows every seed (in parallel under ctx.threads) and returns the grown
// communities, merged and sorted canonically. Fills the rounds histogram and
// duplicate count of `stats` when non-null.
Cover GrowSeeds(const Graph& g, const std::vector<Community>& seeds,
                double growing_threshold, int max_rounds,
                const RunContext& ctx = {}, CaaStats* stats = nullptr);

// Full pipeline: enumerate maximal cliques of size >= min_clique_size,
// filter seeds by the overlapping threshold, grow every seed, merge
// identical communities and sort canonically. Seeds grow in parallel under
// ctx.threads; the output does not depend on the thread count.
CaaResult RunCaa(const Graph& g, const CaaParams& params,
                 const RunContext& ctx = {});

}  // namespace commdet

#endif  // COMMDET_CAA_H_
