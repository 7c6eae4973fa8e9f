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

#ifndef COMMDET_METRICS_H_
#define COMMDET_METRICS_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "commdet/graph.h"
#include "commdet/parallel.h"

namespace commdet {

// Inclusive community-size range [lo, hi].
struct SizeBand {
  static constexpr std::size_t kUnbounded =
      std::numeric_limits<std::size_t>::max();

  std::size_t lo = 1;
  std::size_t hi = kUnbounded;

  bool Contains(std::size_t size) const { return size >= lo && size <= hi; }
  // "4-9", "151+"
  std::string Label() const;

  friend bool operator==(const SizeBand&, const SizeBand&) = default;
};

// Sorted, disjoint bands jointly covering [1, inf).
class SizeBands {
 public:
  // [1-3], [4-9], [10-150], [151+]
  SizeBands();
  // Throws std::invalid_argument unless the bands are contiguous from 1 and
  // the last one is unbounded.
  explicit SizeBands(std::vector<SizeBand> bands);

  // Parses "1-3,4-9,10-150,151+" (a trailing "-" also means unbounded).
  static SizeBands Parse(const std::string& spec);

  const std::vector<SizeBand>& bands() const { return bands_; }
  std::size_t size() const { return bands_.size(); }
  std::size_t IndexOf(std::size_t community_size) const;
  std::string ToString() const;

 private:
  std::vector<SizeBand> bands_;
};

struct SizeHistogram {
  std::vector<std::size_t> counts;
  // counts as a percentage of all communities (0 when the cover is empty)
  std::vector<double> percentages;
};

SizeHistogram ComputeSizeHistogram(const Cover& cover, const SizeBands& bands);

// Fraction of the graph's nodes that belong to at least one community whose
// size lies in [lo, hi]. Throws std::invalid_argument if lo > hi.
double DesirableCoverage(const Graph& g, const Cover& cover,
                         std::size_t lo = 4, std::size_t hi = 150);

struct ExtendedModularityResult {
  double total = 0.0;
  std::vector<double> by_band;
  // Each community's share: its inner pair sum divided by 2m.
  std::vector<double> per_community;
};

// Overlap-aware modularity:
//   EQ = 1/(2m) sum_i sum_{v,w in C_i} [A_vw - k_v k_w / (2m)] / (O_v O_w)
// over ordered pairs including v = w, with degrees and m taken from the
// whole graph and O_v the number of communities containing v. `total` is
// the sum of `by_band`. Throws std::invalid_argument if the graph has no
// edges.
ExtendedModularityResult ExtendedModularity(const Graph& g, const Cover& cover,
                                            const SizeBands& bands = {},
                                            const RunContext& ctx = {});

// Fraction of c's members lying on a triangle of the subgraph induced by c.
double TriangleParticipationRatio(const Graph& g, const Community& c);

struct BandSummary {
  SizeBand band;
  std::size_t count = 0;
  double percentage = 0.0;
  double eq_contribution = 0.0;
  // Per-community mean and member-weighted mean of TPR; empty bands have
  // neither.
  std::optional<double> tpr_mean;
  std::optional<double> tpr_micro;
};

struct CommunityMetrics {
  std::size_t size = 0;
  double tpr = 0.0;
  double eq_contribution = 0.0;
};

struct MetricsReport {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  std::size_t community_count = 0;
  std::size_t largest_community_size = 0;
  double coverage = 0.0;
  double eq_total = 0.0;
  std::vector<BandSummary> bands;
  std::vector<CommunityMetrics> per_community;
};

// Every metric above for one cover. Coverage uses the desirable range
// [4, 150].
MetricsReport Evaluate(const Graph& g, const Cover& cover,
                       const SizeBands& bands = {}, const RunContext& ctx = {});

}  // namespace commdet

#endif  // COMMDET_METRICS_H_
