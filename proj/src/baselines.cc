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

#include "commdet/baselines.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "commdet/clique.h"
#include "commdet/errors.h"

namespace commdet {

namespace {

// Labels among v's neighbors with the highest multiplicity, in first-seen
// order. `counts` must be all zero on entry and is left all zero.
void MajorityLabels(const Graph& g, NodeId v, const std::vector<NodeId>& label,
                    std::vector<std::uint32_t>& counts,
                    std::vector<NodeId>& touched, std::vector<NodeId>& best) {
  touched.clear();
  best.clear();
  std::uint32_t top = 0;
  for (NodeId w : g.neighbors(v)) {
    const NodeId l = label[w];
    if (counts[l]++ == 0) touched.push_back(l);
    top = std::max(top, counts[l]);
  }
  for (NodeId l : touched) {
    if (counts[l] == top) best.push_back(l);
    counts[l] = 0;
  }
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void Union(std::size_t a, std::size_t b) {
    a = Find(a);
    b = Find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t Binomial(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step.
    const unsigned __int128 next =
        static_cast<unsigned __int128>(result) * (n - k + i) / i;
    if (next > cap) return cap + 1;
    result = static_cast<std::uint64_t>(next);
  }
  return result;
}

// Appends every k-subset of `members` (ascending) to `out`, flat.
void AppendSubsets(std::span<const NodeId> members, int k,
                   std::vector<NodeId>& out) {
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  const std::size_t n = members.size();
  while (true) {
    for (std::size_t p : pick) out.push_back(members[p]);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

LpResult LabelPropagation(const Graph& g, const LpParams& params,
                          const RunContext& ctx) {
  if (params.max_iterations < 1) {
    throw std::invalid_argument("max_iterations must be >= 1");
  }
  const NodeId n = g.num_nodes();
  std::vector<NodeId> label(n);
  std::iota(label.begin(), label.end(), NodeId{0});
  std::vector<NodeId> order(label);
  std::vector<std::uint32_t> counts(n, 0);
  std::vector<NodeId> touched;
  std::vector<NodeId> best;
  std::mt19937_64 rng(params.seed);

  LpResult result;
  while (result.sweeps < params.max_iterations) {
    ctx.CheckDeadline();
    ++result.sweeps;
    std::shuffle(order.begin(), order.end(), rng);
    for (NodeId v : order) {
      if (g.degree(v) == 0) continue;
      MajorityLabels(g, v, label, counts, touched, best);
      if (best.size() == 1) {
        label[v] = best.front();
      } else {
        std::uniform_int_distribution<std::size_t> pick(0, best.size() - 1);
        label[v] = best[pick(rng)];
      }
    }

    bool stable = true;
    for (NodeId v = 0; v < n && stable; ++v) {
      if (g.degree(v) == 0) continue;
      MajorityLabels(g, v, label, counts, touched, best);
      stable = std::find(best.begin(), best.end(), label[v]) != best.end();
    }
    if (stable) {
      result.converged = true;
      break;
    }
  }

  std::vector<std::vector<NodeId>> groups(n);
  for (NodeId v = 0; v < n; ++v) groups[label[v]].push_back(v);
  for (auto& members : groups) {
    if (!members.empty()) result.cover.emplace_back(std::move(members));
  }
  SortCover(g, result.cover);
  return result;
}

Cover CliquePercolation(const Graph& g, const CpmParams& params,
                        const RunContext& ctx) {
  const int k = params.k;
  if (k < 3) throw std::invalid_argument("CPM k must be >= 3");
  const auto width = static_cast<std::size_t>(k);
  const CliqueSet maximal = EnumerateMaximalCliques(g, k, ctx);

  std::uint64_t expanded = 0;
  for (const Community& c : maximal.cliques) {
    expanded += Binomial(c.size(), width, ctx.clique_cap);
    if (expanded > ctx.clique_cap) {
      throw ResourceError("k-clique count exceeds cap of " +
                          std::to_string(ctx.clique_cap));
    }
  }

  std::vector<std::vector<NodeId>> per_clique(maximal.cliques.size());
  ParallelFor(ctx, maximal.cliques.size(), [&](std::size_t i) {
    if ((i & 0xff) == 0) ctx.CheckDeadline();
    AppendSubsets(maximal.cliques[i].members(), k, per_clique[i]);
  });
  std::vector<NodeId> flat;
  flat.reserve(expanded * width);
  for (auto& part : per_clique) {
    flat.insert(flat.end(), part.begin(), part.end());
    std::vector<NodeId>().swap(part);
  }

  // Deduplicate k-cliques shared by several maximal cliques.
  auto row = [&](const std::vector<NodeId>& data, std::size_t stride,
                 std::size_t i) {
    return std::span<const NodeId>(data.data() + i * stride, stride);
  };
  auto sorted_unique_rows = [&](const std::vector<NodeId>& data,
                                std::size_t stride) {
    std::vector<std::size_t> idx(stride == 0 ? 0 : data.size() / stride);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      auto ra = row(data, stride, a);
      auto rb = row(data, stride, b);
      return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(),
                                          rb.end());
    });
    return idx;
  };
  std::vector<std::size_t> order = sorted_unique_rows(flat, width);
  std::vector<NodeId> kcliques;
  kcliques.reserve(flat.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto r = row(flat, width, order[i]);
    if (i > 0) {
      auto prev = row(flat, width, order[i - 1]);
      if (std::equal(r.begin(), r.end(), prev.begin())) continue;
    }
    kcliques.insert(kcliques.end(), r.begin(), r.end());
  }
  std::vector<NodeId>().swap(flat);
  const std::size_t count = kcliques.size() / width;

  // Every (k-1)-subset of every k-clique, tagged with its owner; equal
  // subsets link their owners.
  const std::size_t face_width = width - 1;
  std::vector<NodeId> faces;
  std::vector<std::uint32_t> owner;
  faces.reserve(count * width * face_width);
  owner.reserve(count * width);
  for (std::size_t c = 0; c < count; ++c) {
    auto members = row(kcliques, width, c);
    for (std::size_t skip = 0; skip < width; ++skip) {
      for (std::size_t j = 0; j < width; ++j) {
        if (j != skip) faces.push_back(members[j]);
      }
      owner.push_back(static_cast<std::uint32_t>(c));
    }
  }
  ctx.CheckDeadline();
  std::vector<std::size_t> face_order = sorted_unique_rows(faces, face_width);
  DisjointSets components(count);
  for (std::size_t i = 1; i < face_order.size(); ++i) {
    auto a = row(faces, face_width, face_order[i - 1]);
    auto b = row(faces, face_width, face_order[i]);
    if (std::equal(a.begin(), a.end(), b.begin())) {
      components.Union(owner[face_order[i - 1]], owner[face_order[i]]);
    }
  }

  std::vector<std::vector<NodeId>> groups(count);
  for (std::size_t c = 0; c < count; ++c) {
    auto members = row(kcliques, width, c);
    auto& group = groups[components.Find(c)];
    group.insert(group.end(), members.begin(), members.end());
  }
  Cover cover;
  for (auto& members : groups) {
    if (!members.empty()) cover.emplace_back(std::move(members));
  }
  SortCover(g, cover);
  return cover;
}

}  // namespace commdet
