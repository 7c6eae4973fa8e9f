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

#include "commdet/clique.h"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "commdet/errors.h"
#include "commdet/threshold.h"

namespace commdet {

namespace {

class PivotSearch {
 public:
  PivotSearch(const Graph& g, int min_size, const RunContext& ctx,
              std::atomic<std::uint64_t>& found, std::vector<Community>& out)
      : g_(g), min_size_(min_size), ctx_(ctx), found_(found), out_(out) {}

  void Run(NodeId root, std::vector<NodeId> candidates,
           std::vector<NodeId> excluded) {
    clique_.assign(1, root);
    Expand(std::move(candidates), std::move(excluded));
  }

 private:
  void Expand(std::vector<NodeId> candidates, std::vector<NodeId> excluded) {
    if ((++calls_ & 0xfff) == 0) ctx_.CheckDeadline();
    if (candidates.empty()) {
      if (excluded.empty() &&
          clique_.size() >= static_cast<std::size_t>(min_size_)) {
        Emit();
      }
      return;
    }
    if (clique_.size() + candidates.size() <
        static_cast<std::size_t>(min_size_)) {
      return;
    }

    const NodeId pivot = ChoosePivot(candidates, excluded);
    std::vector<NodeId> branches;
    for (NodeId v : candidates) {
      if (!g_.HasEdge(pivot, v)) branches.push_back(v);
    }

    std::vector<NodeId> next_candidates;
    std::vector<NodeId> next_excluded;
    for (NodeId v : branches) {
      next_candidates.clear();
      next_excluded.clear();
      for (NodeId w : candidates) {
        if (w != v && g_.HasEdge(v, w)) next_candidates.push_back(w);
      }
      for (NodeId w : excluded) {
        if (g_.HasEdge(v, w)) next_excluded.push_back(w);
      }
      clique_.push_back(v);
      Expand(next_candidates, next_excluded);
      clique_.pop_back();
      candidates.erase(std::find(candidates.begin(), candidates.end(), v));
      excluded.push_back(v);
    }
  }

  // The vertex of candidates and excluded with the most neighbors among the
  // candidates; branching only on its non-neighbors suffices.
  NodeId ChoosePivot(const std::vector<NodeId>& candidates,
                     const std::vector<NodeId>& excluded) const {
    NodeId best = candidates.front();
    std::size_t best_count = 0;
    bool have_best = false;
    auto consider = [&](NodeId u) {
      std::size_t count = 0;
      for (NodeId w : candidates) {
        if (w != u && g_.HasEdge(u, w)) ++count;
      }
      if (!have_best || count > best_count) {
        best = u;
        best_count = count;
        have_best = true;
      }
      return count + 1 >= candidates.size();
    };
    for (NodeId u : candidates) {
      if (consider(u)) return best;
    }
    for (NodeId u : excluded) {
      if (consider(u) && best_count == candidates.size()) return best;
    }
    return best;
  }

  void Emit() {
    if (found_.fetch_add(1) + 1 > ctx_.clique_cap) {
      throw ResourceError("maximal clique count exceeds cap of " +
                          std::to_string(ctx_.clique_cap));
    }
    out_.emplace_back(clique_);
  }

  const Graph& g_;
  const int min_size_;
  const RunContext& ctx_;
  std::atomic<std::uint64_t>& found_;
  std::vector<Community>& out_;
  std::vector<NodeId> clique_;
  std::uint64_t calls_ = 0;
};

}  // namespace

std::vector<NodeId> DegeneracyOrder(const Graph& g) {
  // Bucket queue keyed by remaining degree with lazy deletion: stale entries
  // are skipped when popped.
  const NodeId n = g.num_nodes();
  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (NodeId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::vector<NodeId>> buckets(max_degree + 1);
  for (NodeId v = n; v-- > 0;) buckets[degree[v]].push_back(v);
  std::vector<bool> removed(n, false);
  std::vector<NodeId> order;
  order.reserve(n);
  std::size_t d = 0;
  while (order.size() < n) {
    while (buckets[d].empty()) ++d;
    const NodeId v = buckets[d].back();
    buckets[d].pop_back();
    if (removed[v] || degree[v] != d) continue;
    removed[v] = true;
    order.push_back(v);
    for (NodeId u : g.neighbors(v)) {
      if (removed[u]) continue;
      buckets[--degree[u]].push_back(u);
    }
    if (d > 0) --d;
  }
  return order;
}

CliqueSet EnumerateMaximalCliques(const Graph& g, int min_size,
                                  const RunContext& ctx) {
  if (min_size < 1) throw std::invalid_argument("min_size must be >= 1");
  const NodeId n = g.num_nodes();
  const std::vector<NodeId> order = DegeneracyOrder(g);
  std::vector<NodeId> rank(n);
  for (NodeId i = 0; i < n; ++i) rank[order[i]] = i;

  std::vector<std::vector<Community>> per_root(n);
  std::atomic<std::uint64_t> found{0};
  ParallelFor(ctx, n, [&](std::size_t i) {
    if ((i & 0x3f) == 0) ctx.CheckDeadline();
    const NodeId v = order[i];
    // Cheap prune: a clique through v needs min_size - 1 neighbors.
    if (g.degree(v) + 1 < static_cast<std::size_t>(min_size)) return;
    std::vector<NodeId> later;
    std::vector<NodeId> earlier;
    for (NodeId w : g.neighbors(v)) {
      (rank[w] > i ? later : earlier).push_back(w);
    }
    PivotSearch search(g, min_size, ctx, found, per_root[i]);
    search.Run(v, std::move(later), std::move(earlier));
  });

  CliqueSet result;
  result.min_size = min_size;
  result.cliques.reserve(found.load());
  for (auto& cliques : per_root) {
    for (Community& c : cliques) result.cliques.push_back(std::move(c));
  }
  SortCover(g, result.cliques);
  return result;
}

CliqueSet FilterOverlapping(const CliqueSet& cs, double overlapping_threshold) {
  const RatioThreshold threshold(overlapping_threshold);
  CliqueSet kept;
  kept.min_size = cs.min_size;

  // node -> indices of kept cliques containing it
  std::vector<std::vector<std::uint32_t>> containing;
  std::vector<std::uint32_t> hits;
  for (const Community& candidate : cs.cliques) {
    hits.clear();
    for (NodeId v : candidate) {
      if (v < containing.size()) {
        hits.insert(hits.end(), containing[v].begin(), containing[v].end());
      }
    }
    std::sort(hits.begin(), hits.end());
    bool discard = false;
    for (std::size_t i = 0; i < hits.size() && !discard;) {
      std::size_t j = i;
      while (j < hits.size() && hits[j] == hits[i]) ++j;
      const std::size_t overlap = j - i;
      const std::size_t smaller =
          std::min(candidate.size(), kept.cliques[hits[i]].size());
      discard = threshold.Exceeded(overlap, smaller);
      i = j;
    }
    if (discard) continue;

    const auto index = static_cast<std::uint32_t>(kept.cliques.size());
    for (NodeId v : candidate) {
      if (v >= containing.size()) containing.resize(v + 1);
      containing[v].push_back(index);
    }
    kept.cliques.push_back(candidate);
  }
  return kept;
}

bool IsMaximalClique(const Graph& g, const Community& c) {
  if (c.empty()) return false;
  for (NodeId v : c) {
    if (v >= g.num_nodes()) return false;
  }
  auto members = c.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.HasEdge(members[i], members[j])) return false;
    }
  }
  // Any extension must be a neighbor of the first member.
  for (NodeId w : g.neighbors(members.front())) {
    if (c.Contains(w)) continue;
    bool adjacent_to_all = true;
    for (NodeId v : members) {
      if (!g.HasEdge(v, w)) {
        adjacent_to_all = false;
        break;
      }
    }
    if (adjacent_to_all) return false;
  }
  return true;
}

}  // namespace commdet
