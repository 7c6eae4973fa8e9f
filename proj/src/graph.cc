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

#include "commdet/graph.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace commdet {

namespace {

std::uint64_t Pack(NodeId u, NodeId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

std::vector<NodeId> RankKey(const Graph& g, const Community& c) {
  std::vector<NodeId> key;
  key.reserve(c.size());
  for (NodeId v : c) key.push_back(g.id_rank(v));
  std::sort(key.begin(), key.end());
  return key;
}

}  // namespace

NodeId DirectedEdgeList::Intern(std::string_view id) {
  auto [it, inserted] =
      index_.try_emplace(std::string(id), static_cast<NodeId>(ids_.size()));
  if (inserted) ids_.emplace_back(id);
  return it->second;
}

void DirectedEdgeList::AddArc(std::string_view source,
                              std::string_view target) {
  NodeId s = Intern(source);
  NodeId t = Intern(target);
  arcs_.emplace_back(s, t);
}

Graph Graph::FromEdges(std::vector<std::string> ids, std::span<const Edge> edges,
                       BuildStats* stats) {
  const auto n = static_cast<NodeId>(ids.size());
  BuildStats local;
  local.input_edges = edges.size();

  std::vector<std::uint64_t> packed;
  packed.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) {
      ++local.self_loops;
      continue;
    }
    packed.push_back(u < v ? Pack(u, v) : Pack(v, u));
  }
  std::sort(packed.begin(), packed.end());
  auto last = std::unique(packed.begin(), packed.end());
  local.duplicate_edges = static_cast<std::size_t>(packed.end() - last);
  packed.erase(last, packed.end());

  Graph g;
  g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint64_t e : packed) {
    ++g.offsets_[(e >> 32) + 1];
    ++g.offsets_[(e & 0xffffffffu) + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(packed.size() * 2);
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Packed edges are sorted by (u, v) with u < v. The first pass appends every
  // node's smaller neighbors in ascending order, the second its larger ones,
  // so each neighbor array comes out sorted.
  for (std::uint64_t e : packed) {
    auto u = static_cast<NodeId>(e >> 32);
    auto v = static_cast<NodeId>(e & 0xffffffffu);
    g.adjacency_[cursor[v]++] = u;
  }
  for (std::uint64_t e : packed) {
    auto u = static_cast<NodeId>(e >> 32);
    auto v = static_cast<NodeId>(e & 0xffffffffu);
    g.adjacency_[cursor[u]++] = v;
  }

  g.index_.reserve(ids.size());
  for (NodeId v = 0; v < n; ++v) {
    if (!g.index_.emplace(ids[v], v).second) {
      throw std::invalid_argument("duplicate external node id: " + ids[v]);
    }
  }
  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::sort(order.begin(), order.end(),
            [&ids](NodeId a, NodeId b) { return ids[a] < ids[b]; });
  g.rank_.resize(n);
  for (NodeId r = 0; r < n; ++r) g.rank_[order[r]] = r;
  g.ids_ = std::move(ids);

  if (stats != nullptr) *stats = local;
  return g;
}

bool Graph::HasEdge(NodeId u, NodeId v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nbrs = neighbors(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::optional<NodeId> Graph::IndexOf(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

Community::Community(std::vector<NodeId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

bool Community::Contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void ValidateCommunity(const Graph& g, const Community& c) {
  if (c.empty()) throw std::out_of_range("empty community");
  if (c.members().back() >= g.num_nodes()) {
    throw std::out_of_range("community member " +
                            std::to_string(c.members().back()) +
                            " out of range for graph with " +
                            std::to_string(g.num_nodes()) + " nodes");
  }
}

bool CommunityOrderLess(const Graph& g, const Community& a,
                        const Community& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return RankKey(g, a) < RankKey(g, b);
}

void SortCover(const Graph& g, Cover& cover) {
  std::vector<std::vector<NodeId>> keys;
  keys.reserve(cover.size());
  for (const Community& c : cover) keys.push_back(RankKey(g, c));
  std::vector<std::size_t> order(cover.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (keys[a].size() != keys[b].size()) {
      return keys[a].size() > keys[b].size();
    }
    return keys[a] < keys[b];
  });
  Cover sorted;
  sorted.reserve(cover.size());
  for (std::size_t i : order) sorted.push_back(std::move(cover[i]));
  cover = std::move(sorted);
}

std::size_t SortAndDeduplicateCover(const Graph& g, Cover& cover) {
  SortCover(g, cover);
  auto last = std::unique(cover.begin(), cover.end());
  auto removed = static_cast<std::size_t>(cover.end() - last);
  cover.erase(last, cover.end());
  return removed;
}

std::vector<std::uint32_t> MembershipCounts(const Graph& g,
                                            const Cover& cover) {
  std::vector<std::uint32_t> counts(g.num_nodes(), 0);
  for (const Community& c : cover) {
    ValidateCommunity(g, c);
    for (NodeId v : c) ++counts[v];
  }
  return counts;
}

Graph Mutualize(const DirectedEdgeList& directed, BuildStats* stats) {
  BuildStats local;
  local.input_edges = directed.num_arcs();

  std::vector<std::uint64_t> arcs;
  arcs.reserve(directed.num_arcs());
  for (auto [s, t] : directed.arcs()) {
    if (s == t) {
      ++local.self_loops;
      continue;
    }
    arcs.push_back(Pack(s, t));
  }
  std::sort(arcs.begin(), arcs.end());
  auto last = std::unique(arcs.begin(), arcs.end());
  local.duplicate_edges = static_cast<std::size_t>(arcs.end() - last);
  arcs.erase(last, arcs.end());

  std::vector<Edge> mutual;
  std::vector<bool> keep(directed.ids().size(), false);
  for (std::uint64_t a : arcs) {
    auto s = static_cast<NodeId>(a >> 32);
    auto t = static_cast<NodeId>(a & 0xffffffffu);
    if (s < t && std::binary_search(arcs.begin(), arcs.end(), Pack(t, s))) {
      mutual.emplace_back(s, t);
      keep[s] = keep[t] = true;
    }
  }

  std::vector<NodeId> relabel(directed.ids().size(), 0);
  std::vector<std::string> ids;
  for (NodeId v = 0; v < directed.ids().size(); ++v) {
    if (keep[v]) {
      relabel[v] = static_cast<NodeId>(ids.size());
      ids.push_back(directed.ids()[v]);
    }
  }
  local.isolated_nodes_removed = directed.ids().size() - ids.size();
  for (Edge& e : mutual) e = {relabel[e.first], relabel[e.second]};

  if (stats != nullptr) *stats = local;
  return Graph::FromEdges(std::move(ids), mutual);
}

Graph InducedSubgraph(const Graph& g, const Community& c) {
  if (!c.empty()) ValidateCommunity(g, c);
  std::vector<std::string> ids;
  ids.reserve(c.size());
  for (NodeId v : c) ids.push_back(g.id(v));
  std::vector<Edge> edges;
  auto members = c.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (NodeId w : g.neighbors(members[i])) {
      if (w <= members[i]) continue;
      auto it = std::lower_bound(members.begin(), members.end(), w);
      if (it != members.end() && *it == w) {
        edges.emplace_back(static_cast<NodeId>(i),
                           static_cast<NodeId>(it - members.begin()));
      }
    }
  }
  return Graph::FromEdges(std::move(ids), edges);
}

}  // namespace commdet
