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

#include "commdet/caa.h"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "commdet/clique.h"
#include "commdet/threshold.h"

namespace commdet {

void CaaParams::Validate() const {
  if (min_clique_size < 3) {
    throw std::invalid_argument("min_clique_size must be >= 3");
  }
  if (!(overlapping_threshold >= 0.0 && overlapping_threshold <= 1.0)) {
    throw std::invalid_argument("overlapping_threshold must lie in [0, 1]");
  }
  if (!(growing_threshold > 0.0 && growing_threshold <= 1.0)) {
    throw std::invalid_argument("growing_threshold must lie in (0, 1]");
  }
  if (max_rounds < 1) throw std::invalid_argument("max_rounds must be >= 1");
}

Community GrowCommunity(const Graph& g, const Community& seed,
                        double growing_threshold, int max_rounds,
                        int* rounds) {
  if (!(growing_threshold > 0.0 && growing_threshold <= 1.0)) {
    throw std::invalid_argument("growing_threshold must lie in (0, 1]");
  }
  const RatioThreshold threshold(growing_threshold);
  ValidateCommunity(g, seed);
  auto seed_members = seed.members();
  for (std::size_t i = 0; i < seed_members.size(); ++i) {
    for (std::size_t j = i + 1; j < seed_members.size(); ++j) {
      if (!g.HasEdge(seed_members[i], seed_members[j])) {
        throw std::invalid_argument("seed is not a clique");
      }
    }
  }

  std::vector<NodeId> members(seed_members.begin(), seed_members.end());
  std::unordered_set<NodeId> inside(members.begin(), members.end());
  // outside neighbor -> number of its edges into the community
  std::unordered_map<NodeId, std::uint32_t> links;
  auto add_member_links = [&](NodeId v) {
    for (NodeId w : g.neighbors(v)) {
      if (!inside.contains(w)) ++links[w];
    }
  };
  for (NodeId v : members) add_member_links(v);

  int executed = 0;
  std::vector<NodeId> admitted;
  while (executed < max_rounds) {
    const std::size_t snapshot = members.size();
    admitted.clear();
    for (auto [v, count] : links) {
      if (threshold.Reached(count, snapshot)) admitted.push_back(v);
    }
    if (admitted.empty()) break;
    ++executed;
    for (NodeId v : admitted) {
      links.erase(v);
      inside.insert(v);
      members.push_back(v);
    }
    for (NodeId v : admitted) add_member_links(v);
  }

  if (rounds != nullptr) *rounds = executed;
  return Community(std::move(members));
}

Cover GrowSeeds(const Graph& g, const std::vector<Community>& seeds,
                double growing_threshold, int max_rounds,
                const RunContext& ctx, CaaStats* stats) {
  std::vector<int> rounds(seeds.size(), 0);
  Cover grown(seeds.size());
  ParallelFor(ctx, seeds.size(), [&](std::size_t i) {
    if ((i & 0x3f) == 0) ctx.CheckDeadline();
    grown[i] = GrowCommunity(g, seeds[i], growing_threshold, max_rounds,
                             &rounds[i]);
  });
  const std::size_t merged = SortAndDeduplicateCover(g, grown);
  if (stats != nullptr) {
    for (int r : rounds) ++stats->rounds_histogram[r];
    stats->duplicates_merged = merged;
  }
  return grown;
}

CaaResult RunCaa(const Graph& g, const CaaParams& params,
                 const RunContext& ctx) {
  params.Validate();
  CaaResult result;

  const CliqueSet cliques =
      EnumerateMaximalCliques(g, params.min_clique_size, ctx);
  result.stats.maximal_cliques = cliques.cliques.size();
  const CliqueSet seeds =
      FilterOverlapping(cliques, params.overlapping_threshold);
  result.stats.seeds = seeds.cliques.size();
  result.cover = GrowSeeds(g, seeds.cliques, params.growing_threshold,
                           params.max_rounds, ctx, &result.stats);
  return result;
}

}  // namespace commdet
