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

#include "commdet/report.h"

#include <charconv>
#include <cstdio>
#include <ostream>

namespace commdet {

namespace {

nlohmann::json OptionalNumber(const std::optional<double>& value) {
  return value ? nlohmann::json(*value) : nlohmann::json(nullptr);
}

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

std::string FixedOrDash(const std::optional<double>& value) {
  return value ? Fixed(*value, 4) : "-";
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, end);
}

nlohmann::json ToJson(const MetricsReport& report) {
  nlohmann::json bands = nlohmann::json::array();
  for (const BandSummary& b : report.bands) {
    bands.push_back({{"band", b.band.Label()},
                     {"count", b.count},
                     {"percentage", b.percentage},
                     {"eq_contribution", b.eq_contribution},
                     {"tpr_mean", OptionalNumber(b.tpr_mean)},
                     {"tpr_micro", OptionalNumber(b.tpr_micro)}});
  }
  nlohmann::json communities = nlohmann::json::array();
  for (const CommunityMetrics& c : report.per_community) {
    communities.push_back({{"size", c.size},
                           {"tpr", c.tpr},
                           {"eq_contribution", c.eq_contribution}});
  }
  return {{"node_count", report.node_count},
          {"edge_count", report.edge_count},
          {"community_count", report.community_count},
          {"largest_community_size", report.largest_community_size},
          {"coverage", report.coverage},
          {"eq_total", report.eq_total},
          {"bands", bands},
          {"per_community", communities}};
}

nlohmann::json ToJson(const CommunityTheme& theme) {
  nlohmann::json tags = nlohmann::json::array();
  for (const TagCount& t : theme.top_tags) {
    tags.push_back({{"tag", "#" + t.tag}, {"count", t.count}});
  }
  return {{"size", theme.size},
          {"members_with_data", theme.members_with_data},
          {"members_missing", theme.members_missing},
          {"top_tags", tags},
          {"mean_pairwise_jaccard", OptionalNumber(theme.mean_pairwise_jaccard)},
          {"top_tag_penetration", OptionalNumber(theme.top_tag_penetration)}};
}

void WriteBandCsv(const std::vector<LabeledReport>& reports,
                  std::ostream& out) {
  out << "algorithm_label,band,count,percentage,eq_contribution,tpr_mean,"
         "tpr_micro\n";
  for (const auto& [label, report] : reports) {
    for (const BandSummary& b : report.bands) {
      out << label << ',' << b.band.Label() << ',' << b.count << ','
          << FormatDouble(b.percentage) << ','
          << FormatDouble(b.eq_contribution) << ','
          << (b.tpr_mean ? FormatDouble(*b.tpr_mean) : "") << ','
          << (b.tpr_micro ? FormatDouble(*b.tpr_micro) : "") << '\n';
    }
  }
}

void WriteMetricsTable(const std::vector<LabeledReport>& reports,
                       std::ostream& out) {
  char line[256];
  std::snprintf(line, sizeof(line), "%-20s %12s %10s %10s %10s\n", "algorithm",
                "communities", "largest", "coverage", "EQ");
  out << line;
  for (const auto& [label, r] : reports) {
    std::snprintf(line, sizeof(line), "%-20s %12zu %10zu %10s %10s\n",
                  label.c_str(), r.community_count, r.largest_community_size,
                  Fixed(r.coverage, 4).c_str(), Fixed(r.eq_total, 4).c_str());
    out << line;
  }
  for (const auto& [label, r] : reports) {
    out << '\n' << label << '\n';
    std::snprintf(line, sizeof(line), "  %-10s %10s %8s %10s %9s %9s\n", "band",
                  "count", "pct", "EQ", "TPR mean", "TPR micro");
    out << line;
    for (const BandSummary& b : r.bands) {
      std::snprintf(line, sizeof(line), "  %-10s %10zu %8s %10s %9s %9s\n",
                    b.band.Label().c_str(), b.count,
                    Fixed(b.percentage, 2).c_str(),
                    Fixed(b.eq_contribution, 4).c_str(),
                    FixedOrDash(b.tpr_mean).c_str(),
                    FixedOrDash(b.tpr_micro).c_str());
      out << line;
    }
  }
}

}  // namespace commdet
