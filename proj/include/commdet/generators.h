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

#ifndef COMMDET_GENERATORS_H_
#define COMMDET_GENERATORS_H_

#include <cstdint>

#include "commdet/graph.h"

namespace commdet {

struct PlantedPartitionParams {
  int blocks = 1;
  int block_size = 1;
  double p_in = 0.0;
  double p_out = 0.0;
  std::uint64_t seed = 0;
};

// Planted-partition random graph. Node v (external id "v") belongs to block
// v / block_size. Intra-block pairs are joined with probability p_in and
// inter-block pairs with p_out; isolated nodes are kept. Pairs are sampled
// by geometric skipping, so the cost is proportional to the edge count.
// Throws std::invalid_argument unless 0 <= p_out <= p_in <= 1 and both
// counts are positive.
Graph PlantedPartition(const PlantedPartitionParams& params);

inline int PlantedBlockOf(NodeId v, int block_size) {
  return static_cast<int>(v / static_cast<NodeId>(block_size));
}

// G(n, p): a single planted block.
inline Graph ErdosRenyi(int n, double p, std::uint64_t seed) {
  return PlantedPartition({.blocks = 1, .block_size = n, .p_in = p,
                           .p_out = p, .seed = seed});
}

}  // namespace commdet

#endif  // COMMDET_GENERATORS_H_
