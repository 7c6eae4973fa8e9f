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

#ifndef COMMDET_REPORT_H_
#define COMMDET_REPORT_H_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "commdet/hashtags.h"
#include "commdet/metrics.h"

namespace commdet {

// Shortest decimal text that reads back to the same double.
std::string FormatDouble(double value);

nlohmann::json ToJson(const MetricsReport& report);
nlohmann::json ToJson(const CommunityTheme& theme);

using LabeledReport = std::pair<std::string, MetricsReport>;

// Per-band rows for plotting: algorithm_label, band, count, percentage,
// eq_contribution, tpr_mean, tpr_micro. Undefined TPR values are empty.
void WriteBandCsv(const std::vector<LabeledReport>& reports, std::ostream& out);

// Human-readable comparison: one summary row per cover, then band rows.
void WriteMetricsTable(const std::vector<LabeledReport>& reports,
                       std::ostream& out);

}  // namespace commdet

#endif  // COMMDET_REPORT_H_
