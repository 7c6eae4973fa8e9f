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

#include "commdet/graph_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "commdet/errors.h"

namespace commdet {

namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' ||
         c == '\f';
}

// Calls fn(line_number, line) for every line that is neither blank nor a
// comment. Carriage returns before the newline are stripped.
template <typename Fn>
void ForEachRecord(std::string_view text, std::string_view comment_prefix,
                   Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.starts_with(comment_prefix)) continue;
    fn(line_no, line);
  }
}

std::pair<std::string_view, std::string_view> SplitEdge(
    const std::string& path, std::size_t line_no, std::string_view line) {
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos || line.find('\t', tab + 1) !=
                                           std::string_view::npos) {
    throw ParseError(path, line_no,
                     "expected two tab-separated fields: source<TAB>target");
  }
  std::string_view source = line.substr(0, tab);
  std::string_view target = line.substr(tab + 1);
  for (std::string_view id : {source, target}) {
    if (id.empty()) throw ParseError(path, line_no, "empty node id");
    if (std::any_of(id.begin(), id.end(), IsSpace)) {
      throw ParseError(path, line_no, "node id contains whitespace");
    }
  }
  return {source, target};
}

std::ofstream OpenForWrite(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path + " for writing");
  return out;
}

}  // namespace

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

DirectedEdgeList LoadDirectedEdgeList(const std::string& path) {
  const std::string text = ReadFile(path);
  DirectedEdgeList edges;
  ForEachRecord(text, "#", [&](std::size_t line_no, std::string_view line) {
    auto [source, target] = SplitEdge(path, line_no, line);
    edges.AddArc(source, target);
  });
  return edges;
}

Graph LoadGraph(const std::string& path, BuildStats* stats) {
  DirectedEdgeList raw = LoadDirectedEdgeList(path);
  return Graph::FromEdges(raw.ids(), raw.arcs(), stats);
}

void WriteEdgeList(const Graph& g, std::ostream& out) {
  for (auto [u, v] : g.Edges()) out << g.id(u) << '\t' << g.id(v) << '\n';
}

void WriteEdgeList(const Graph& g, const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WriteEdgeList(g, out);
  if (!out) throw InputError("failed writing " + path);
}

Cover LoadCover(const Graph& g, const std::string& path) {
  const std::string text = ReadFile(path);
  Cover cover;
  ForEachRecord(text, "#", [&](std::size_t line_no, std::string_view line) {
    std::vector<NodeId> members;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && IsSpace(line[pos])) ++pos;
      std::size_t end = pos;
      while (end < line.size() && !IsSpace(line[end])) ++end;
      if (end == pos) break;
      std::string id(line.substr(pos, end - pos));
      auto index = g.IndexOf(id);
      if (!index) throw ParseError(path, line_no, "unknown node id '" + id + "'");
      members.push_back(*index);
      pos = end;
    }
    if (!members.empty()) cover.emplace_back(std::move(members));
  });
  return cover;
}

void WriteCover(const Graph& g, const Cover& cover, std::ostream& out) {
  std::vector<const std::string*> ids;
  for (const Community& c : cover) {
    ids.clear();
    for (NodeId v : c) ids.push_back(&g.id(v));
    std::sort(ids.begin(), ids.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i > 0) out << ' ';
      out << *ids[i];
    }
    out << '\n';
  }
}

void WriteCover(const Graph& g, const Cover& cover, const std::string& path) {
  std::ofstream out = OpenForWrite(path);
  WriteCover(g, cover, out);
  if (!out) throw InputError("failed writing " + path);
}

}  // namespace commdet
