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

#ifndef COMMDET_GRAPH_H_
#define COMMDET_GRAPH_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace commdet {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Counts of records dropped while building a simple graph.
struct BuildStats {
  std::size_t input_edges = 0;
  std::size_t duplicate_edges = 0;
  std::size_t self_loops = 0;
  std::size_t isolated_nodes_removed = 0;
};

// Raw directed follower topology. External ids are interned in order of
// first appearance; duplicate arcs are kept until mutualization.
class DirectedEdgeList {
 public:
  void AddArc(std::string_view source, std::string_view target);

  std::size_t num_arcs() const { return arcs_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::vector<Edge>& arcs() const { return arcs_; }

 private:
  NodeId Intern(std::string_view id);

  std::vector<std::string> ids_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<Edge> arcs_;
};

// Immutable undirected simple graph over dense indices [0, n). Adjacency is
// stored as sorted neighbor arrays (CSR), so each node's neighborhood is a
// sorted set. Every node carries an external string id.
class Graph {
 public:
  Graph() = default;

  // Builds the graph from undirected index pairs. Self-loops and duplicate
  // pairs (in either orientation) are dropped and counted in `stats`.
  static Graph FromEdges(std::vector<std::string> ids,
                         std::span<const Edge> edges,
                         BuildStats* stats = nullptr);

  NodeId num_nodes() const { return static_cast<NodeId>(ids_.size()); }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  bool HasEdge(NodeId u, NodeId v) const;

  const std::string& id(NodeId v) const { return ids_[v]; }
  const std::vector<std::string>& ids() const { return ids_; }
  std::optional<NodeId> IndexOf(const std::string& id) const;

  // Position of id(v) in the lexicographic order of all external ids.
  NodeId id_rank(NodeId v) const { return rank_[v]; }

  // Each undirected edge once, as (u, v) with u < v, in index order.
  std::vector<Edge> Edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.offsets_ == b.offsets_ &&
           a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> adjacency_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<NodeId> rank_;
};

// A set of node indices, kept sorted and duplicate-free.
class Community {
 public:
  Community() = default;
  explicit Community(std::vector<NodeId> members);
  Community(std::initializer_list<NodeId> members)
      : Community(std::vector<NodeId>(members)) {}

  std::span<const NodeId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(NodeId v) const;
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const Community&, const Community&) = default;
  friend auto operator<=>(const Community&, const Community&) = default;

 private:
  std::vector<NodeId> members_;
};

// An ordered collection of possibly overlapping communities.
using Cover = std::vector<Community>;

// Throws std::out_of_range if `c` is empty or names a node outside `g`.
void ValidateCommunity(const Graph& g, const Community& c);

// Canonical ordering: larger communities first, ties broken by comparing the
// members' external ids, each community's ids taken in sorted order.
bool CommunityOrderLess(const Graph& g, const Community& a,
                        const Community& b);
void SortCover(const Graph& g, Cover& cover);

// Sorts canonically and drops communities with identical member sets.
// Returns the number of duplicates removed.
std::size_t SortAndDeduplicateCover(const Graph& g, Cover& cover);

// O_v: the number of communities in `cover` containing each node.
std::vector<std::uint32_t> MembershipCounts(const Graph& g,
                                            const Cover& cover);

// Keeps exactly the arcs whose reverse is also present, drops self-loops and
// then every node left without a mutual edge. Surviving nodes keep their
// first-appearance order.
Graph Mutualize(const DirectedEdgeList& directed, BuildStats* stats = nullptr);

// The subgraph induced by `c`. External ids are preserved; node i of the
// result is the i-th smallest index of `c`.
Graph InducedSubgraph(const Graph& g, const Community& c);

}  // namespace commdet

#endif  // COMMDET_GRAPH_H_
