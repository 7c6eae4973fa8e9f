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

#ifndef COMMDET_GRAPH_IO_H_
#define COMMDET_GRAPH_IO_H_

#include <iosfwd>
#include <string>

#include "commdet/graph.h"

namespace commdet {

// Edge-list files: one `source<TAB>target` record per line. Lines starting
// with '#' and blank lines are skipped. Ids may not be empty or contain
// whitespace, since cover files separate ids with spaces.
DirectedEdgeList LoadDirectedEdgeList(const std::string& path);

// Loads an edge list as an undirected simple graph: both orientations of a
// pair collapse to one edge, self-loops are dropped.
Graph LoadGraph(const std::string& path, BuildStats* stats = nullptr);

// Writes every undirected edge once, in index order.
void WriteEdgeList(const Graph& g, std::ostream& out);
void WriteEdgeList(const Graph& g, const std::string& path);

// Cover files: one community per line, space-separated external ids, '#'
// comment lines skipped. Ids unknown to `g` are a parse error.
Cover LoadCover(const Graph& g, const std::string& path);

// One line per community, members' ids in lexicographic order. The cover
// order is written as given.
void WriteCover(const Graph& g, const Cover& cover, std::ostream& out);
void WriteCover(const Graph& g, const Cover& cover, const std::string& path);

// Reads a whole file, throwing InputError if it cannot be opened.
std::string ReadFile(const std::string& path);

}  // namespace commdet

#endif  // COMMDET_GRAPH_IO_H_
