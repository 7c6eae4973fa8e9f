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

#ifndef COMMDET_TESTS_FIXTURES_H_
#define COMMDET_TESTS_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "commdet/graph.h"
#include "json.hpp"

namespace commdet::testing {

using NamedEdge = std::pair<std::string, std::string>;

// Graph whose node ids are given in index order.
Graph MakeGraph(const std::vector<std::string>& ids,
                const std::vector<NamedEdge>& edges);
// Graph over ids "0".."n-1".
Graph MakeIndexGraph(int n, const std::vector<Edge>& edges);

Graph Complete(int n);
Graph Path(int n);
Graph Cycle(int n);
// a0..a4 and b0..b4, two disjoint K5.
Graph TwoDisjointK5();
// Triangle a,b,c plus pendant d attached to c.
Graph TrianglePendant();
// Triangles {a,b,c} and {b,c,d}.
Graph TrianglesSharingEdge();
// Triangles {a,b,c} and {c,d,e}.
Graph TrianglesSharingVertex();

// G(n, p) drawn by an independent Bernoulli trial per pair; test-only.
Graph RandomGraph(int n, double p, std::uint64_t seed);

Community Members(const Graph& g, const std::vector<std::string>& ids);

// Path of a versioned fixture file under tests/data.
std::string DataPath(const std::string& name);
// Parsed fixtures.json.
const nlohmann::json& FixtureManifest();
// The manifest entry called `name`; throws if absent.
const nlohmann::json& FixtureEntry(const std::string& name);

// Fresh empty directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::string File(const std::string& name) const {
    return (path_ / name).string();
  }
  std::string Write(const std::string& name, const std::string& text) const;

 private:
  std::filesystem::path path_;
};

std::string Slurp(const std::string& path);

}  // namespace commdet::testing

#endif  // COMMDET_TESTS_FIXTURES_H_
