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

#include "fixtures.h"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unistd.h>

namespace commdet::testing {

Graph MakeGraph(const std::vector<std::string>& ids,
                const std::vector<NamedEdge>& edges) {
  auto index = [&](const std::string& id) {
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (ids[i] == id) return static_cast<NodeId>(i);
    }
    throw std::invalid_argument("unknown fixture id " + id);
  };
  std::vector<Edge> indexed;
  for (const auto& [a, b] : edges) indexed.emplace_back(index(a), index(b));
  return Graph::FromEdges(ids, indexed);
}

Graph MakeIndexGraph(int n, const std::vector<Edge>& edges) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::to_string(i));
  return Graph::FromEdges(ids, edges);
}

Graph Complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return MakeIndexGraph(n, edges);
}

Graph Path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return MakeIndexGraph(n, edges);
}

Graph Cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return MakeIndexGraph(n, edges);
}

Graph TwoDisjointK5() {
  std::vector<std::string> ids;
  std::vector<NamedEdge> edges;
  for (const char* block : {"a", "b"}) {
    for (int i = 0; i < 5; ++i) ids.push_back(block + std::to_string(i));
    for (int i = 0; i < 5; ++i) {
      for (int j = i + 1; j < 5; ++j) {
        edges.emplace_back(block + std::to_string(i), block + std::to_string(j));
      }
    }
  }
  return MakeGraph(ids, edges);
}

Graph TrianglePendant() {
  return MakeGraph({"a", "b", "c", "d"},
                   {{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
}

Graph TrianglesSharingEdge() {
  return MakeGraph({"a", "b", "c", "d"}, {{"a", "b"},
                                          {"a", "c"},
                                          {"b", "c"},
                                          {"b", "d"},
                                          {"c", "d"}});
}

Graph TrianglesSharingVertex() {
  return MakeGraph({"a", "b", "c", "d", "e"}, {{"a", "b"},
                                               {"a", "c"},
                                               {"b", "c"},
                                               {"c", "d"},
                                               {"c", "e"},
                                               {"d", "e"}});
}

Graph RandomGraph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return MakeIndexGraph(n, edges);
}

Community Members(const Graph& g, const std::vector<std::string>& ids) {
  std::vector<NodeId> members;
  for (const std::string& id : ids) {
    auto index = g.IndexOf(id);
    if (!index) throw std::invalid_argument("unknown id " + id);
    members.push_back(*index);
  }
  return Community(members);
}

std::string DataPath(const std::string& name) {
  return std::string(COMMDET_TEST_DATA_DIR) + "/v1/" + name;
}

const nlohmann::json& FixtureManifest() {
  static const nlohmann::json manifest =
      nlohmann::json::parse(Slurp(DataPath("fixtures.json")));
  return manifest;
}

const nlohmann::json& FixtureEntry(const std::string& name) {
  for (const auto& entry : FixtureManifest().at("fixtures")) {
    if (entry.at("name") == name) return entry;
  }
  throw std::invalid_argument("no fixture named " + name);
}

TempDir::TempDir() {
  static std::atomic<int> counter{0};
  path_ = std::filesystem::temp_directory_path() /
          ("commdet_test_" + std::to_string(::getpid()) + "_" +
           std::to_string(counter++));
  std::filesystem::remove_all(path_);
  std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

std::string TempDir::Write(const std::string& name,
                           const std::string& text) const {
  const std::string file = File(name);
  std::ofstream out(file, std::ios::binary);
  out << text;
  return file;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace commdet::testing
