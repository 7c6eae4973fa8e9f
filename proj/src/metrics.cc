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

#include "commdet/metrics.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace commdet {

std::string SizeBand::Label() const {
  if (hi == kUnbounded) return std::to_string(lo) + "+";
  return std::to_string(lo) + "-" + std::to_string(hi);
}

SizeBands::SizeBands()
    : bands_{{1, 3}, {4, 9}, {10, 150}, {151, SizeBand::kUnbounded}} {}

SizeBands::SizeBands(std::vector<SizeBand> bands) : bands_(std::move(bands)) {
  if (bands_.empty()) throw std::invalid_argument("no size bands given");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    const SizeBand& b = bands_[i];
    if (b.lo != expected || b.hi < b.lo) {
      throw std::invalid_argument(
          "size bands must be contiguous, sorted and start at 1; band " +
          b.Label() + " breaks this");
    }
    if (b.hi == SizeBand::kUnbounded) {
      if (i + 1 != bands_.size()) {
        throw std::invalid_argument("only the last size band may be open");
      }
      return;
    }
    expected = b.hi + 1;
  }
  throw std::invalid_argument("the last size band must be open-ended");
}

SizeBands SizeBands::Parse(const std::string& spec) {
  std::vector<SizeBand> bands;
  std::stringstream in(spec);
  std::string item;
  auto parse_number = [&](const std::string& text) -> std::size_t {
    if (text.empty() ||
        !std::all_of(text.begin(), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw std::invalid_argument("bad size band '" + item + "'");
    }
    return std::stoull(text);
  };
  while (std::getline(in, item, ',')) {
    SizeBand band;
    if (!item.empty() && item.back() == '+') {
      band.lo = parse_number(item.substr(0, item.size() - 1));
    } else {
      const std::size_t dash = item.find('-');
      if (dash == std::string::npos) {
        band.lo = band.hi = parse_number(item);
      } else {
        band.lo = parse_number(item.substr(0, dash));
        const std::string rest = item.substr(dash + 1);
        band.hi = rest.empty() ? SizeBand::kUnbounded : parse_number(rest);
      }
    }
    bands.push_back(band);
  }
  return SizeBands(std::move(bands));
}

std::size_t SizeBands::IndexOf(std::size_t community_size) const {
  for (std::size_t i = 0; i < bands_.size(); ++i) {
    if (bands_[i].Contains(community_size)) return i;
  }
  // Size 0 only; communities are never empty.
  return 0;
}

std::string SizeBands::ToString() const {
  std::string out;
  for (const SizeBand& b : bands_) {
    if (!out.empty()) out += ',';
    out += b.Label();
  }
  return out;
}

SizeHistogram ComputeSizeHistogram(const Cover& cover, const SizeBands& bands) {
  SizeHistogram h;
  h.counts.assign(bands.size(), 0);
  h.percentages.assign(bands.size(), 0.0);
  for (const Community& c : cover) ++h.counts[bands.IndexOf(c.size())];
  if (!cover.empty()) {
    for (std::size_t i = 0; i < bands.size(); ++i) {
      h.percentages[i] = 100.0 * static_cast<double>(h.counts[i]) /
                         static_cast<double>(cover.size());
    }
  }
  return h;
}

double DesirableCoverage(const Graph& g, const Cover& cover, std::size_t lo,
                         std::size_t hi) {
  if (lo > hi) throw std::invalid_argument("coverage range has lo > hi");
  if (g.num_nodes() == 0) return 0.0;
  std::vector<bool> covered(g.num_nodes(), false);
  std::size_t count = 0;
  for (const Community& c : cover) {
    if (c.size() < lo || c.size() > hi) continue;
    ValidateCommunity(g, c);
    for (NodeId v : c) {
      if (!covered[v]) {
        covered[v] = true;
        ++count;
      }
    }
  }
  return static_cast<double>(count) / static_cast<double>(g.num_nodes());
}

ExtendedModularityResult ExtendedModularity(const Graph& g, const Cover& cover,
                                            const SizeBands& bands,
                                            const RunContext& ctx) {
  if (g.num_edges() == 0) {
    throw std::invalid_argument(
        "extended modularity is undefined for a graph without edges");
  }
  const std::vector<std::uint32_t> memberships = MembershipCounts(g, cover);
  const double two_m = 2.0 * static_cast<double>(g.num_edges());

  ExtendedModularityResult result;
  result.per_community.assign(cover.size(), 0.0);
  ParallelFor(ctx, cover.size(), [&](std::size_t i) {
    const Community& c = cover[i];
    double observed = 0.0;
    double degree_mass = 0.0;
    for (NodeId v : c) {
      const double inv_v = 1.0 / memberships[v];
      degree_mass += static_cast<double>(g.degree(v)) * inv_v;
      for (NodeId w : g.neighbors(v)) {
        if (c.Contains(w)) observed += inv_v / memberships[w];
      }
    }
    result.per_community[i] =
        (observed - degree_mass * degree_mass / two_m) / two_m;
  });

  result.by_band.assign(bands.size(), 0.0);
  for (std::size_t i = 0; i < cover.size(); ++i) {
    result.by_band[bands.IndexOf(cover[i].size())] += result.per_community[i];
  }
  for (double band_sum : result.by_band) result.total += band_sum;
  return result;
}

double TriangleParticipationRatio(const Graph& g, const Community& c) {
  ValidateCommunity(g, c);
  auto members = c.members();
  const std::size_t size = members.size();
  // Adjacency inside c, in local positions.
  std::vector<std::vector<std::uint32_t>> local(size);
  for (std::size_t i = 0; i < size; ++i) {
    for (NodeId w : g.neighbors(members[i])) {
      auto it = std::lower_bound(members.begin(), members.end(), w);
      if (it != members.end() && *it == w) {
        local[i].push_back(static_cast<std::uint32_t>(it - members.begin()));
      }
    }
  }

  std::vector<bool> on_triangle(size, false);
  std::vector<bool> marked(size, false);
  for (std::size_t v = 0; v < size; ++v) {
    if (on_triangle[v]) continue;
    for (std::uint32_t u : local[v]) marked[u] = true;
    for (std::uint32_t u : local[v]) {
      auto hit = std::find_if(local[u].begin(), local[u].end(),
                              [&](std::uint32_t w) { return marked[w]; });
      if (hit != local[u].end()) {
        on_triangle[v] = on_triangle[u] = on_triangle[*hit] = true;
        break;
      }
    }
    for (std::uint32_t u : local[v]) marked[u] = false;
  }
  const auto hits =
      static_cast<double>(std::count(on_triangle.begin(), on_triangle.end(), true));
  return hits / static_cast<double>(size);
}

MetricsReport Evaluate(const Graph& g, const Cover& cover,
                       const SizeBands& bands, const RunContext& ctx) {
  MetricsReport report;
  report.node_count = g.num_nodes();
  report.edge_count = g.num_edges();
  report.community_count = cover.size();
  for (const Community& c : cover) {
    report.largest_community_size =
        std::max(report.largest_community_size, c.size());
  }
  report.coverage = DesirableCoverage(g, cover);

  const ExtendedModularityResult eq = ExtendedModularity(g, cover, bands, ctx);
  report.eq_total = eq.total;

  report.per_community.resize(cover.size());
  ParallelFor(ctx, cover.size(), [&](std::size_t i) {
    report.per_community[i] = {cover[i].size(),
                               TriangleParticipationRatio(g, cover[i]),
                               eq.per_community[i]};
  });

  const SizeHistogram histogram = ComputeSizeHistogram(cover, bands);
  std::vector<double> tpr_sum(bands.size(), 0.0);
  std::vector<double> weighted_sum(bands.size(), 0.0);
  std::vector<double> member_sum(bands.size(), 0.0);
  for (const CommunityMetrics& m : report.per_community) {
    const std::size_t b = bands.IndexOf(m.size);
    tpr_sum[b] += m.tpr;
    weighted_sum[b] += m.tpr * static_cast<double>(m.size);
    member_sum[b] += static_cast<double>(m.size);
  }
  for (std::size_t b = 0; b < bands.size(); ++b) {
    BandSummary summary;
    summary.band = bands.bands()[b];
    summary.count = histogram.counts[b];
    summary.percentage = histogram.percentages[b];
    summary.eq_contribution = eq.by_band[b];
    if (summary.count > 0) {
      summary.tpr_mean = tpr_sum[b] / static_cast<double>(summary.count);
      summary.tpr_micro = weighted_sum[b] / member_sum[b];
    }
    report.bands.push_back(summary);
  }
  return report;
}

}  // namespace commdet
