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

#include <algorithm>
#include <iterator>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include <gtest/gtest.h>

#include "commdet/errors.h"
#include "commdet/generators.h"
#include "commdet/graph.h"
#include "commdet/graph_io.h"
#include "fixtures.h"
#include "oracles.h"

namespace commdet {
namespace {

using testing::DataPath;
using testing::TempDir;

void ExpectSimpleSymmetric(const Graph& g) {
  const auto adj = oracle::AdjacencyMatrix(g);
  std::size_t degree_sum = 0;
  for (NodeId v = 0; v < g.num_nodes(); ++v) {
    auto nbrs = g.neighbors(v);
    EXPECT_TRUE(std::is_sorted(nbrs.begin(), nbrs.end()));
    EXPECT_EQ(std::adjacent_find(nbrs.begin(), nbrs.end()), nbrs.end());
    degree_sum += nbrs.size();
    for (NodeId w : nbrs) {
      EXPECT_NE(v, w);
      EXPECT_TRUE(g.HasEdge(w, v));
    }
  }
  EXPECT_EQ(degree_sum, 2 * g.num_edges());
}

DirectedEdgeList Arcs(
    std::initializer_list<std::pair<const char*, const char*>> arcs) {
  DirectedEdgeList d;
  for (auto [a, b] : arcs) d.AddArc(a, b);
  return d;
}

TEST(MutualizeTest, DropsOneWayArcsAndIsolatedNodes) {
  BuildStats stats;
  Graph g = Mutualize(Arcs({{"a", "b"}, {"b", "a"}, {"a", "c"}}), &stats);
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_TRUE(g.HasEdge(*g.IndexOf("a"), *g.IndexOf("b")));
  EXPECT_FALSE(g.IndexOf("c").has_value());
  EXPECT_EQ(stats.isolated_nodes_removed, 1u);
}

TEST(MutualizeTest, EmptyInput) {
  Graph g = Mutualize(DirectedEdgeList());
  EXPECT_EQ(g.num_nodes(), 0u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(MutualizeTest, SelfLoopDropped) {
  BuildStats stats;
  Graph g = Mutualize(Arcs({{"a", "a"}, {"a", "b"}, {"b", "a"}}), &stats);
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(stats.self_loops, 1u);
}

TEST(MutualizeTest, DirectedSampleFixture) {
  const auto& expected = testing::FixtureEntry("directed_sample").at("expected");
  BuildStats stats;
  Graph g = Mutualize(LoadDirectedEdgeList(DataPath("directed_sample.tsv")),
                      &stats);
  std::set<std::string> nodes(g.ids().begin(), g.ids().end());
  EXPECT_EQ(nodes, expected.at("mutual_nodes").get<std::set<std::string>>());
  std::set<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : g.Edges()) {
    edges.emplace(std::min(g.id(u), g.id(v)), std::max(g.id(u), g.id(v)));
  }
  std::set<std::pair<std::string, std::string>> want;
  for (const auto& e : expected.at("mutual_edges")) want.emplace(e[0], e[1]);
  EXPECT_EQ(edges, want);
  EXPECT_EQ(stats.input_edges, expected.at("arcs").get<std::size_t>());
  EXPECT_EQ(stats.self_loops, expected.at("self_loops").get<std::size_t>());
  EXPECT_EQ(stats.duplicate_edges, 1u);
  EXPECT_EQ(stats.isolated_nodes_removed,
            expected.at("isolated_removed").get<std::size_t>());
  ExpectSimpleSymmetric(g);
}

TEST(MutualizeTest, RandomInputsKeepInvariants) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, 14);
    DirectedEdgeList d;
    std::set<std::pair<int, int>> distinct;
    for (int i = 0; i < 80; ++i) {
      int a = pick(rng), b = pick(rng);
      d.AddArc(std::to_string(a), std::to_string(b));
      if (a != b) distinct.emplace(a, b);
    }
    Graph g = Mutualize(d);
    ExpectSimpleSymmetric(g);
    EXPECT_LE(2 * g.num_edges(), distinct.size());
    for (NodeId v = 0; v < g.num_nodes(); ++v) EXPECT_GE(g.degree(v), 1u);
    for (auto [u, v] : g.Edges()) {
      int a = std::stoi(g.id(u)), b = std::stoi(g.id(v));
      EXPECT_TRUE(distinct.contains({a, b}) && distinct.contains({b, a}));
    }
    // Feeding the output back in both directions reproduces it.
    DirectedEdgeList again;
    for (auto [u, v] : g.Edges()) {
      again.AddArc(g.id(u), g.id(v));
      again.AddArc(g.id(v), g.id(u));
    }
    Graph g2 = Mutualize(again);
    ASSERT_EQ(g2.num_nodes(), g.num_nodes());
    ASSERT_EQ(g2.num_edges(), g.num_edges());
    for (auto [u, v] : g2.Edges()) {
      EXPECT_TRUE(g.HasEdge(*g.IndexOf(g2.id(u)), *g.IndexOf(g2.id(v))));
    }
  }
}

TEST(GraphTest, FromEdgesDropsLoopsAndDuplicates) {
  BuildStats stats;
  std::vector<Edge> edges{{0, 1}, {1, 0}, {1, 1}, {1, 2}, {0, 1}};
  Graph g = Graph::FromEdges({"a", "b", "c"}, edges, &stats);
  EXPECT_EQ(g.num_edges(), 2u);
  EXPECT_EQ(stats.self_loops, 1u);
  EXPECT_EQ(stats.duplicate_edges, 2u);
  ExpectSimpleSymmetric(g);
}

TEST(GraphTest, RejectsBadInput) {
  std::vector<Edge> out_of_range{{0, 5}};
  EXPECT_THROW(Graph::FromEdges({"a", "b"}, out_of_range), std::out_of_range);
  std::vector<Edge> none;
  EXPECT_THROW(Graph::FromEdges({"a", "a"}, none), std::invalid_argument);
}

TEST(GraphTest, IdRankFollowsLexicographicOrder) {
  Graph g = Graph::FromEdges({"b", "c", "a"}, std::vector<Edge>{{0, 1}});
  EXPECT_EQ(g.id_rank(2), 0u);
  EXPECT_EQ(g.id_rank(0), 1u);
  EXPECT_EQ(g.id_rank(1), 2u);
}

TEST(GraphIoTest, DirectedLoad) {
  TempDir dir;
  DirectedEdgeList d =
      LoadDirectedEdgeList(dir.Write("d.tsv", "a\tb\nb\ta\n"));
  EXPECT_EQ(d.num_arcs(), 2u);
}

TEST(GraphIoTest, UndirectedLoad) {
  TempDir dir;
  Graph g = LoadGraph(dir.Write("g.tsv", "a\tb\n"));
  EXPECT_EQ(g.num_nodes(), 2u);
  EXPECT_EQ(g.num_edges(), 1u);
}

TEST(GraphIoTest, CommentsCrlfAndMissingTrailingNewline) {
  TempDir dir;
  Graph g = LoadGraph(dir.Write("g.tsv", "# header\r\na\tb\r\n\nb\tc"));
  EXPECT_EQ(g.num_nodes(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
}

TEST(GraphIoTest, MalformedLinesNameTheLine) {
  TempDir dir;
  auto expect_line = [&](const std::string& text, std::size_t line) {
    try {
      LoadGraph(dir.Write("bad.tsv", text));
      ADD_FAILURE() << "no error for " << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), line) << e.what();
    }
  };
  expect_line("a\n", 1);
  expect_line("a\tb\nc\td\te\n", 2);
  expect_line("# c\n\ta\n", 2);
  expect_line("a b\tc\n", 1);
}

TEST(GraphIoTest, MissingFileNamesPath) {
  try {
    LoadGraph("/nonexistent/graph.tsv");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/graph.tsv"),
              std::string::npos);
  }
}

TEST(GraphIoTest, EdgeListRoundTrip) {
  TempDir dir;
  Graph g = testing::RandomGraph(20, 0.3, 4);
  WriteEdgeList(g, dir.File("g.tsv"));
  Graph back = LoadGraph(dir.File("g.tsv"));
  ASSERT_EQ(back.num_edges(), g.num_edges());
  for (auto [u, v] : back.Edges()) {
    EXPECT_TRUE(g.HasEdge(*g.IndexOf(back.id(u)), *g.IndexOf(back.id(v))));
  }
}

TEST(GraphIoTest, CoverRoundTrip) {
  TempDir dir;
  Graph g = testing::TwoDisjointK5();
  Cover cover{testing::Members(g, {"a0", "a1", "b3"}),
              testing::Members(g, {"b4", "a0"})};
  WriteCover(g, cover, dir.File("c.cover"));
  EXPECT_EQ(testing::Slurp(dir.File("c.cover")), "a0 a1 b3\na0 b4\n");
  EXPECT_EQ(LoadCover(g, dir.File("c.cover")), cover);
}

TEST(GraphIoTest, CoverUnknownIdIsParseError) {
  TempDir dir;
  Graph g = testing::TwoDisjointK5();
  try {
    LoadCover(g, dir.Write("c.cover", "# x\na0 a1\na2 zz\n"));
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(CommunityTest, SortsAndDeduplicates) {
  Community c{5, 1, 3, 1};
  EXPECT_EQ(std::vector<NodeId>(c.begin(), c.end()),
            (std::vector<NodeId>{1, 3, 5}));
  EXPECT_TRUE(c.Contains(3));
  EXPECT_FALSE(c.Contains(2));
}

TEST(CommunityTest, Validation) {
  Graph g = testing::Complete(3);
  EXPECT_NO_THROW(ValidateCommunity(g, Community{0, 2}));
  EXPECT_THROW(ValidateCommunity(g, Community{0, 3}), std::out_of_range);
  EXPECT_THROW(ValidateCommunity(g, Community{}), std::out_of_range);
}

TEST(CoverTest, CanonicalOrder) {
  // ids chosen so that index order and lexicographic order disagree
  Graph g = Graph::FromEdges({"d", "c", "b", "a"}, std::vector<Edge>{});
  Cover cover{Community{0}, Community{1, 2}, Community{0, 3}, Community{3}};
  SortCover(g, cover);
  // {a,d} < {b,c} lexicographically; then singletons {a} < {d}
  EXPECT_EQ(cover, (Cover{Community{0, 3}, Community{1, 2}, Community{3},
                          Community{0}}));
}

TEST(CoverTest, DeduplicateCountsRemovals) {
  Graph g = testing::Complete(4);
  Cover cover{Community{1, 2}, Community{0, 1, 2}, Community{2, 1}};
  EXPECT_EQ(SortAndDeduplicateCover(g, cover), 1u);
  EXPECT_EQ(cover, (Cover{Community{0, 1, 2}, Community{1, 2}}));
}

TEST(CoverTest, MembershipCounts) {
  Graph g = testing::Complete(4);
  Cover cover{Community{0, 1}, Community{1, 2}};
  EXPECT_EQ(MembershipCounts(g, cover), (std::vector<std::uint32_t>{1, 2, 1, 0}));
}

TEST(InducedSubgraphTest, ThreeNodesOfK4) {
  Graph sub = InducedSubgraph(testing::Complete(4), Community{0, 1, 3});
  EXPECT_EQ(sub.num_nodes(), 3u);
  EXPECT_EQ(sub.num_edges(), 3u);
  EXPECT_EQ(sub.ids(), (std::vector<std::string>{"0", "1", "3"}));
}

TEST(InducedSubgraphTest, SingleNode) {
  Graph sub = InducedSubgraph(testing::Complete(4), Community{2});
  EXPECT_EQ(sub.num_nodes(), 1u);
  EXPECT_EQ(sub.num_edges(), 0u);
}

TEST(InducedSubgraphTest, OutOfRange) {
  EXPECT_THROW(InducedSubgraph(testing::Complete(4), Community{1, 9}),
               std::out_of_range);
}

TEST(InducedSubgraphTest, MatchesEdgeFilter) {
  std::mt19937_64 rng(99);
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    Graph g = testing::RandomGraph(10, 0.4, seed);
    std::vector<NodeId> all(10);
    std::iota(all.begin(), all.end(), 0);
    std::vector<NodeId> pick;
    std::sample(all.begin(), all.end(), std::back_inserter(pick), 5, rng);
    Community c(pick);
    Graph sub = InducedSubgraph(g, c);
    std::set<std::pair<std::string, std::string>> want, got;
    for (auto [u, v] : g.Edges()) {
      if (c.Contains(u) && c.Contains(v)) want.emplace(g.id(u), g.id(v));
    }
    for (auto [u, v] : sub.Edges()) {
      got.emplace(std::min(sub.id(u), sub.id(v)), std::max(sub.id(u), sub.id(v)));
    }
    // ids are single digits, so string order equals index order
    EXPECT_EQ(got, want);
  }
}

TEST(InducedSubgraphTest, AllNodesIsIdentity) {
  Graph g = testing::RandomGraph(12, 0.5, 3);
  std::vector<NodeId> all(g.num_nodes());
  std::iota(all.begin(), all.end(), 0);
  EXPECT_EQ(InducedSubgraph(g, Community(all)), g);
}

TEST(PlantedPartitionTest, DegenerateProbabilities) {
  Graph g = PlantedPartition({.blocks = 2, .block_size = 5, .p_in = 1.0,
                              .p_out = 0.0, .seed = 123});
  EXPECT_EQ(g.num_nodes(), 10u);
  EXPECT_EQ(g.num_edges(), 20u);
  for (auto [u, v] : g.Edges()) {
    EXPECT_EQ(PlantedBlockOf(u, 5), PlantedBlockOf(v, 5));
  }
  Graph k4 = PlantedPartition({.blocks = 1, .block_size = 4, .p_in = 1.0,
                               .p_out = 0.0, .seed = 9});
  EXPECT_EQ(k4.num_edges(), 6u);
}

TEST(PlantedPartitionTest, SeededDeterminism) {
  PlantedPartitionParams params{.blocks = 2, .block_size = 50, .p_in = 0.3,
                                .p_out = 0.01, .seed = 7};
  Graph a = PlantedPartition(params);
  Graph b = PlantedPartition(params);
  EXPECT_EQ(a, b);
  params.seed = 8;
  EXPECT_FALSE(PlantedPartition(params) == a);
  ExpectSimpleSymmetric(a);
}

TEST(PlantedPartitionTest, KeepsIsolatedNodes) {
  Graph g = PlantedPartition({.blocks = 3, .block_size = 4, .p_in = 0.0,
                              .p_out = 0.0, .seed = 1});
  EXPECT_EQ(g.num_nodes(), 12u);
  EXPECT_EQ(g.num_edges(), 0u);
  EXPECT_EQ(g.id(11), "11");
}

TEST(PlantedPartitionTest, EdgeDensityNearTarget) {
  Graph g = PlantedPartition({.blocks = 4, .block_size = 100, .p_in = 0.2,
                              .p_out = 0.01, .seed = 5});
  std::size_t inside = 0, across = 0;
  for (auto [u, v] : g.Edges()) {
    (PlantedBlockOf(u, 100) == PlantedBlockOf(v, 100) ? inside : across)++;
  }
  const double in_pairs = 4 * 100 * 99 / 2.0;
  const double out_pairs = 400 * 399 / 2.0 - in_pairs;
  EXPECT_NEAR(inside / in_pairs, 0.2, 0.02);
  EXPECT_NEAR(across / out_pairs, 0.01, 0.003);
}

TEST(PlantedPartitionTest, InvalidParameters) {
  EXPECT_THROW(PlantedPartition({.blocks = 2, .block_size = 5, .p_in = 0.1,
                                 .p_out = 0.2, .seed = 0}),
               std::invalid_argument);
  EXPECT_THROW(PlantedPartition({.blocks = 2, .block_size = 5, .p_in = 1.5,
                                 .p_out = 0.2, .seed = 0}),
               std::invalid_argument);
  EXPECT_THROW(PlantedPartition({.blocks = 0, .block_size = 5, .p_in = 0.5,
                                 .p_out = 0.2, .seed = 0}),
               std::invalid_argument);
}

}  // namespace
}  // namespace commdet
