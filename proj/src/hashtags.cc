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

#include "commdet/hashtags.h"

#include <algorithm>
#include <charconv>
#include <locale>
#include <random>
#include <stdexcept>
#include <string_view>

#include <boost/locale/encoding_utf.hpp>

#include "commdet/errors.h"
#include "commdet/graph_io.h"

namespace commdet {

namespace {

const std::ctype<wchar_t>& UnicodeCtype() {
  static const std::locale locale = [] {
    try {
      return std::locale("C.UTF-8");
    } catch (const std::runtime_error&) {
      return std::locale::classic();
    }
  }();
  return std::use_facet<std::ctype<wchar_t>>(locale);
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    std::size_t tab = line.find('\t', pos);
    fields.push_back(line.substr(pos, tab - pos));
    if (tab == std::string_view::npos) return fields;
    pos = tab + 1;
  }
}

}  // namespace

std::string NormalizeHashtag(const std::string& tag, bool preserve_case) {
  const std::size_t start = tag.find_first_not_of('#');
  if (start == std::string::npos) return {};
  std::string body = tag.substr(start);
  if (preserve_case) return body;
  std::wstring wide = boost::locale::conv::utf_to_utf<wchar_t>(body);
  const auto& ctype = UnicodeCtype();
  ctype.tolower(wide.data(), wide.data() + wide.size());
  return boost::locale::conv::utf_to_utf<char>(wide);
}

void HashtagTable::Add(const std::string& user,
                       const std::string& normalized_tag, std::uint64_t count) {
  if (count == 0) return;
  users_[user][normalized_tag] += count;
}

const std::map<std::string, std::uint64_t>& HashtagTable::UserTags(
    const std::string& user) const {
  static const std::map<std::string, std::uint64_t> kEmpty;
  auto it = users_.find(user);
  return it == users_.end() ? kEmpty : it->second;
}

HashtagTable LoadHashtags(const std::string& path, bool preserve_case) {
  const std::string text = ReadFile(path);
  HashtagTable table;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string_view line(text.data() + pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.starts_with("//")) continue;

    const auto fields = SplitTabs(line);
    if (fields.size() != 3) {
      throw ParseError(path, line_no,
                       "expected three tab-separated fields: "
                       "user<TAB>hashtag<TAB>count");
    }
    if (fields[0].empty()) throw ParseError(path, line_no, "empty user id");
    const std::string tag =
        NormalizeHashtag(std::string(fields[1]), preserve_case);
    if (tag.empty()) throw ParseError(path, line_no, "empty hashtag");
    std::string_view count_text = fields[2];
    if (count_text.starts_with('-')) {
      throw ParseError(path, line_no, "negative count");
    }
    std::uint64_t count = 0;
    auto [end, ec] = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (ec != std::errc() || end != count_text.data() + count_text.size() ||
        count_text.empty()) {
      throw ParseError(path, line_no,
                       "count is not a non-negative integer: '" +
                           std::string(count_text) + "'");
    }
    table.Add(std::string(fields[0]), tag, count);
  }
  return table;
}

std::vector<TagCount> RankTags(const std::map<std::string, std::uint64_t>& tags,
                               std::size_t k) {
  std::vector<TagCount> ranked;
  ranked.reserve(tags.size());
  for (const auto& [tag, count] : tags) ranked.push_back({tag, count});
  auto better = [](const TagCount& a, const TagCount& b) {
    if (a.count != b.count) return a.count > b.count;
    return a.tag < b.tag;
  };
  if (ranked.size() > k) {
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                      ranked.end(), better);
    ranked.resize(k);
  } else {
    std::sort(ranked.begin(), ranked.end(), better);
  }
  return ranked;
}

std::vector<TagCount> UserTopK(const HashtagTable& table,
                               const std::string& user, std::size_t k) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  return RankTags(table.UserTags(user), k);
}

double Jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::size_t shared = 0;
  for (const std::string& tag : a) shared += b.count(tag);
  const std::size_t united = a.size() + b.size() - shared;
  return united == 0 ? 0.0
                     : static_cast<double>(shared) / static_cast<double>(united);
}

CommunityTheme ComputeCommunityTheme(const Graph& g, const Community& c,
                                     const HashtagTable& table, std::size_t k,
                                     std::size_t top_community) {
  if (k < 1 || top_community < 1) {
    throw std::invalid_argument("top-k sizes must be >= 1");
  }
  ValidateCommunity(g, c);
  CommunityTheme theme;
  theme.size = c.size();

  std::map<std::string, std::uint64_t> aggregate;
  std::vector<std::set<std::string>> top_sets;
  for (NodeId v : c) {
    const auto& tags = table.UserTags(g.id(v));
    if (tags.empty()) {
      ++theme.members_missing;
      continue;
    }
    ++theme.members_with_data;
    for (const auto& [tag, count] : tags) aggregate[tag] += count;
    std::set<std::string> top;
    for (TagCount& t : RankTags(tags, k)) top.insert(std::move(t.tag));
    top_sets.push_back(std::move(top));
  }
  theme.top_tags = RankTags(aggregate, top_community);

  if (top_sets.size() >= 2) {
    double sum = 0.0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < top_sets.size(); ++i) {
      for (std::size_t j = i + 1; j < top_sets.size(); ++j) {
        sum += Jaccard(top_sets[i], top_sets[j]);
        ++pairs;
      }
    }
    theme.mean_pairwise_jaccard = sum / static_cast<double>(pairs);
  }
  if (!top_sets.empty()) {
    const std::string& leader = theme.top_tags.front().tag;
    const auto holders = std::count_if(
        top_sets.begin(), top_sets.end(),
        [&](const std::set<std::string>& s) { return s.contains(leader); });
    theme.top_tag_penetration =
        static_cast<double>(holders) / static_cast<double>(top_sets.size());
  }
  return theme;
}

Cover SampleCommunities(const Cover& cover, std::size_t size_lo,
                        std::size_t size_hi, std::size_t count,
                        std::uint64_t seed) {
  if (count < 1) throw std::invalid_argument("sample count must be >= 1");
  std::vector<std::size_t> qualifying;
  for (std::size_t i = 0; i < cover.size(); ++i) {
    if (cover[i].size() >= size_lo && cover[i].size() <= size_hi) {
      qualifying.push_back(i);
    }
  }
  std::vector<std::size_t> chosen;
  if (qualifying.size() <= count) {
    chosen = std::move(qualifying);
  } else {
    std::mt19937_64 rng(seed);
    std::sample(qualifying.begin(), qualifying.end(),
                std::back_inserter(chosen), count, rng);
  }
  Cover sample;
  sample.reserve(chosen.size());
  for (std::size_t i : chosen) sample.push_back(cover[i]);
  return sample;
}

}  // namespace commdet
