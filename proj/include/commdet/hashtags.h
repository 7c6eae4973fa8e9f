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

#ifndef COMMDET_HASHTAGS_H_
#define COMMDET_HASHTAGS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "commdet/graph.h"

namespace commdet {

// Strips every leading '#' and, unless preserve_case is set, lowercases the
// rest (Unicode simple case mapping). Idempotent.
std::string NormalizeHashtag(const std::string& tag, bool preserve_case = false);

struct TagCount {
  std::string tag;  // normalized, without '#'
  std::uint64_t count = 0;

  friend bool operator==(const TagCount&, const TagCount&) = default;
};

// Per-user hashtag usage counts keyed by external node id.
class HashtagTable {
 public:
  // Adds `count` uses of the normalized tag; zero counts are ignored.
  void Add(const std::string& user, const std::string& normalized_tag,
           std::uint64_t count);

  // Empty map for unknown users.
  const std::map<std::string, std::uint64_t>& UserTags(
      const std::string& user) const;
  bool HasUser(const std::string& user) const { return users_.contains(user); }
  std::size_t user_count() const { return users_.size(); }

 private:
  std::map<std::string, std::map<std::string, std::uint64_t>> users_;
};

// Hashtag files: `user<TAB>hashtag<TAB>count` per line; lines starting with
// "//" and blank lines are skipped. Repeated (user, tag) pairs are summed.
// Throws ParseError on a wrong field count, an empty user or tag, or a count
// that is not a non-negative integer.
HashtagTable LoadHashtags(const std::string& path, bool preserve_case = false);

// Highest counts first, ties in lexicographic tag order.
std::vector<TagCount> RankTags(const std::map<std::string, std::uint64_t>& tags,
                               std::size_t k);

// The user's k most used tags; empty for unknown users. Throws
// std::invalid_argument if k < 1.
std::vector<TagCount> UserTopK(const HashtagTable& table,
                               const std::string& user, std::size_t k = 10);

// |a & b| / |a | b|; two empty sets score 0.
double Jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

struct CommunityTheme {
  std::size_t size = 0;
  std::size_t members_with_data = 0;
  std::size_t members_missing = 0;
  // Sum of member counts per tag, top K.
  std::vector<TagCount> top_tags;
  // Mean Jaccard similarity of members' top-k tag sets over all pairs of
  // members with data. Undefined with fewer than two such members.
  std::optional<double> mean_pairwise_jaccard;
  // Fraction of members with data whose top-k contains the community's most
  // used tag. Undefined when no member has data.
  std::optional<double> top_tag_penetration;
};

CommunityTheme ComputeCommunityTheme(const Graph& g, const Community& c,
                                     const HashtagTable& table,
                                     std::size_t k = 10,
                                     std::size_t top_community = 20);

// Uniform sample without replacement of `count` communities whose size lies
// in [size_lo, size_hi]; all of them when fewer qualify. Cover order is
// preserved. Throws std::invalid_argument if count < 1.
Cover SampleCommunities(const Cover& cover, std::size_t size_lo,
                        std::size_t size_hi, std::size_t count,
                        std::uint64_t seed);

}  // namespace commdet

#endif  // COMMDET_HASHTAGS_H_
