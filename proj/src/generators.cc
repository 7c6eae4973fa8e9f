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

#include "commdet/generators.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace commdet {

namespace {

double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Visits the candidate pairs (u, w) for w in [row_begin(u), row_end) over
// all rows u in order, keeping each independently with probability p.
template <typename RowBegin, typename RowEnd>
void SamplePairs(NodeId n, RowBegin row_begin, RowEnd row_end, double p,
                 std::mt19937_64& rng, std::vector<Edge>& out) {
  if (p <= 0.0) return;
  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId w = row_begin(u); w < row_end(u); ++w) out.emplace_back(u, w);
    }
    return;
  }
  const double log_q = std::log1p(-p);
  auto skip = [&]() {
    double r = UniformUnit(rng);
    double s = std::floor(std::log1p(-r) / log_q);
    return s > 1e18 ? std::uint64_t{1} << 62 : static_cast<std::uint64_t>(s);
  };
  std::uint64_t gap = skip();
  for (NodeId u = 0; u < n; ++u) {
    const NodeId begin = row_begin(u);
    const NodeId end = row_end(u);
    if (begin >= end) continue;
    std::uint64_t offset = gap;
    const std::uint64_t width = end - begin;
    while (offset < width) {
      out.emplace_back(u, static_cast<NodeId>(begin + offset));
      offset += 1 + skip();
    }
    gap = offset - width;
  }
}

}  // namespace

Graph PlantedPartition(const PlantedPartitionParams& params) {
  if (params.blocks < 1 || params.block_size < 1) {
    throw std::invalid_argument("blocks and block_size must be >= 1");
  }
  if (!(params.p_out >= 0.0 && params.p_out <= params.p_in &&
        params.p_in <= 1.0)) {
    throw std::invalid_argument("probabilities must satisfy 0 <= p_out <= "
                                "p_in <= 1");
  }
  const std::uint64_t total =
      static_cast<std::uint64_t>(params.blocks) * params.block_size;
  if (total > 0xffffffffull) throw std::invalid_argument("graph too large");
  const auto n = static_cast<NodeId>(total);
  const auto size = static_cast<NodeId>(params.block_size);

  std::mt19937_64 rng(params.seed);
  std::vector<Edge> edges;
  auto block_end = [size](NodeId u) { return (u / size + 1) * size; };
  SamplePairs(
      n, [](NodeId u) { return u + 1; }, block_end, params.p_in, rng, edges);
  SamplePairs(
      n, block_end, [n](NodeId) { return n; }, params.p_out, rng, edges);

  std::vector<std::string> ids;
  ids.reserve(n);
  for (NodeId v = 0; v < n; ++v) ids.push_back(std::to_string(v));
  return Graph::FromEdges(std::move(ids), edges);
}

}  // namespace commdet
