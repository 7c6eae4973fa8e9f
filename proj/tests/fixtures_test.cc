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

// Checks every expected value in fixtures.json against the brute-force
// oracles, so that the module tests can rely on the manifest.

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "commdet/graph_io.h"
#include "fixtures.h"
#include "oracles.h"

namespace commdet {
namespace {

using testing::DataPath;
using testing::FixtureManifest;
using NodeSet = oracle::NodeSet;

NodeSet Indices(const Graph& g, const nlohmann::json& ids) {
  NodeSet out;
  for (const auto& id : ids) out.push_back(*g.IndexOf(id.get<std::string>()));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::string>> Lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("//", 0) == 0) continue;
    std::vector<std::string> fields;
    std::stringstream split(line);
    std::string field;
    while (std::getline(split, field, '\t')) fields.push_back(field);
    rows.push_back(fields);
  }
  return rows;
}

TEST(FixtureManifestTest, EveryFileExists) {
  for (const auto& entry : FixtureManifest().at("fixtures")) {
    for (const char* key : {"graph", "cover", "directed", "hashtags"}) {
      if (!entry.contains(key)) continue;
      std::ifstream in(DataPath(entry.at(key)));
      EXPECT_TRUE(in.good()) << entry.at(key);
    }
    EXPECT_TRUE(entry.contains("source")) << entry.at("name");
  }
}

TEST(FixtureManifestTest, GraphValuesMatchOracles) {
  for (const auto& entry : FixtureManifest().at("fixtures")) {
    if (!entry.contains("graph")) continue;
    SCOPED_TRACE(entry.at("name").get<std::string>());
    const Graph g = LoadGraph(DataPath(entry.at("graph")));
    const auto& expected = entry.at("expected");
    const auto adj = oracle::AdjacencyMatrix(g);

    if (expected.contains("nodes")) {
      EXPECT_EQ(g.num_nodes(), expected.at("nodes").get<std::size_t>());
      std::size_t pairs = 0;
      for (std::size_t i = 0; i < g.num_nodes(); ++i) {
        for (std::size_t j = i + 1; j < g.num_nodes(); ++j) pairs += adj[i][j];
      }
      EXPECT_EQ(pairs, expected.at("edges").get<std::size_t>());
    }
    if (expected.contains("maximal_cliques")) {
      std::set<NodeSet> want;
      for (const auto& c : expected.at("maximal_cliques")) {
        want.insert(Indices(g, c));
      }
      EXPECT_EQ(oracle::MaximalCliques(g), want);
    }
    if (expected.contains("cpm_k3")) {
      std::multiset<NodeSet> want;
      for (const auto& c : expected.at("cpm_k3")) want.insert(Indices(g, c));
      EXPECT_EQ(oracle::CpmK3(g), want);
    }
    if (expected.contains("whole_graph_tpr")) {
      NodeSet all;
      for (NodeId v = 0; v < g.num_nodes(); ++v) all.push_back(v);
      EXPECT_DOUBLE_EQ(oracle::TriangleParticipation(g, all),
                       expected.at("whole_graph_tpr").get<double>());
    }
    if (expected.contains("growth")) {
      const auto& growth = expected.at("growth");
      int rounds = 0;
      const double t = growth.at("threshold");
      const NodeSet grown = oracle::Grow(g, Indices(g, growth.at("seed")),
                                         static_cast<int>(t * 10 + 0.5), 10,
                                         &rounds);
      EXPECT_EQ(grown, Indices(g, growth.at("result")));
      EXPECT_EQ(rounds, growth.at("rounds").get<int>());
    }
    if (entry.contains("cover")) {
      std::vector<NodeSet> cover;
      for (const auto& row : Lines(DataPath(entry.at("cover")))) {
        std::stringstream split(row[0]);
        nlohmann::json ids = nlohmann::json::array();
        std::string id;
        while (split >> id) ids.push_back(id);
        cover.push_back(Indices(g, ids));
      }
      std::vector<int> labels(g.num_nodes(), -1);
      for (std::size_t c = 0; c < cover.size(); ++c) {
        for (NodeId v : cover[c]) labels[v] = static_cast<int>(c);
      }
      const double q = expected.at("modularity");
      EXPECT_NEAR(oracle::Modularity(g, labels), q, 1e-12);
      EXPECT_NEAR(oracle::OverlappingModularity(g, cover), q, 1e-12);
      std::set<NodeId> covered;
      for (const auto& c : cover) covered.insert(c.begin(), c.end());
      EXPECT_DOUBLE_EQ(static_cast<double>(covered.size()) / g.num_nodes(),
                       expected.at("coverage").get<double>());
      const auto& tpr = expected.at("tpr");
      ASSERT_EQ(tpr.size(), cover.size());
      for (std::size_t c = 0; c < cover.size(); ++c) {
        EXPECT_DOUBLE_EQ(oracle::TriangleParticipation(g, cover[c]),
                         tpr[c].get<double>());
      }
    }
  }
}

TEST(FixtureManifestTest, DirectedSampleReciprocity) {
  const auto& entry = testing::FixtureEntry("directed_sample");
  const auto& expected = entry.at("expected");
  std::set<std::pair<std::string, std::string>> arcs;
  std::set<std::string> seen;
  std::size_t lines = 0, loops = 0;
  for (const auto& row : Lines(DataPath(entry.at("directed")))) {
    ++lines;
    seen.insert(row[0]);
    seen.insert(row[1]);
    if (row[0] == row[1]) {
      ++loops;
      continue;
    }
    arcs.emplace(row[0], row[1]);
  }
  std::set<std::pair<std::string, std::string>> mutual;
  std::set<std::string> nodes;
  for (const auto& [a, b] : arcs) {
    if (a < b && arcs.contains({b, a})) {
      mutual.emplace(a, b);
      nodes.insert(a);
      nodes.insert(b);
    }
  }
  EXPECT_EQ(lines, expected.at("arcs").get<std::size_t>());
  EXPECT_EQ(loops, expected.at("self_loops").get<std::size_t>());
  EXPECT_EQ(nodes, expected.at("mutual_nodes").get<std::set<std::string>>());
  std::set<std::pair<std::string, std::string>> want;
  for (const auto& e : expected.at("mutual_edges")) {
    want.emplace(e[0].get<std::string>(), e[1].get<std::string>());
  }
  EXPECT_EQ(mutual, want);
  // every endpoint that is not in a mutual pair
  EXPECT_EQ(seen.size() - nodes.size(),
            expected.at("isolated_removed").get<std::size_t>());
}

// Sums per (user, tag) with an optional ASCII fold, then ranks by count and
// name. Enough for the ASCII-only fixture files.
std::map<std::string, std::map<std::string, long>> ReadTags(
    const std::string& path, bool fold) {
  std::map<std::string, std::map<std::string, long>> users;
  for (const auto& row : Lines(path)) {
    std::string tag = row[1].substr(row[1].find_first_not_of('#'));
    if (fold) {
      std::transform(tag.begin(), tag.end(), tag.begin(),
                     [](unsigned char ch) { return std::tolower(ch); });
    }
    users[row[0]][tag] += std::stol(row[2]);
  }
  return users;
}

std::vector<std::pair<std::string, long>> Ranked(
    const std::map<std::string, long>& tags) {
  std::vector<std::pair<std::string, long>> out(tags.begin(), tags.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  return out;
}

TEST(FixtureManifestTest, TopUsersRanking) {
  const auto& entry = testing::FixtureEntry("top_users");
  const auto& expected = entry.at("expected");
  const auto users = ReadTags(DataPath(entry.at("hashtags")), true);
  for (const char* user : {"user1", "user2", "user3"}) {
    const auto ranked = Ranked(users.at(user));
    std::vector<std::string> names;
    for (const auto& [tag, count] : ranked) names.push_back(tag);
    names.resize(std::min<std::size_t>(names.size(), 10));
    EXPECT_EQ(names, expected.at(user).get<std::vector<std::string>>()) << user;
  }
  std::vector<long> counts;
  for (const auto& [tag, count] : Ranked(users.at("user1"))) {
    counts.push_back(count);
  }
  EXPECT_EQ(counts, expected.at("user1_counts").get<std::vector<long>>());
}

TEST(FixtureManifestTest, CommunityTotals) {
  const auto& entry = testing::FixtureEntry("community_totals");
  const auto& expected = entry.at("expected");
  for (bool fold : {false, true}) {
    std::map<std::string, long> total;
    for (const auto& [user, tags] :
         ReadTags(DataPath(entry.at("hashtags")), fold)) {
      for (const auto& [tag, count] : tags) total[tag] += count;
    }
    const auto ranked = Ranked(total);
    const std::string key = fold ? "folded_head" : "preserve_case";
    const auto names = expected.at(key).get<std::vector<std::string>>();
    const auto counts = expected.at(key + "_counts")
                            .get<std::vector<long>>();
    ASSERT_GE(ranked.size(), names.size());
    for (std::size_t i = 0; i < names.size(); ++i) {
      EXPECT_EQ(ranked[i].first, names[i]);
      EXPECT_EQ(ranked[i].second, counts[i]);
    }
  }
}

TEST(FixtureManifestTest, JaccardThree) {
  const auto& entry = testing::FixtureEntry("jaccard_three");
  const auto& expected = entry.at("expected");
  const std::size_t k = expected.at("top_k");
  std::vector<std::set<std::string>> tops;
  for (const auto& [user, tags] :
       ReadTags(DataPath(entry.at("hashtags")), true)) {
    std::set<std::string> top;
    for (const auto& [tag, count] : Ranked(tags)) {
      if (top.size() < k) top.insert(tag);
    }
    tops.push_back(top);
  }
  ASSERT_EQ(tops.size(), 3u);
  double sum = 0.0;
  int pairs = 0;
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = i + 1; j < tops.size(); ++j) {
      std::size_t common = 0;
      for (const auto& t : tops[i]) common += tops[j].count(t);
      sum += static_cast<double>(common) /
             static_cast<double>(tops[i].size() + tops[j].size() - common);
      ++pairs;
    }
  }
  EXPECT_NEAR(sum / pairs, expected.at("mean_pairwise_jaccard").get<double>(),
              1e-12);
}

}  // namespace
}  // namespace commdet
