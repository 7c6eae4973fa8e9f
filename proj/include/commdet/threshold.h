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

#ifndef COMMDET_THRESHOLD_H_
#define COMMDET_THRESHOLD_H_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace commdet {

// A ratio threshold in [0, 1], resolved to nine decimal places so that
// decimal inputs compare exactly: 0.7 of 10 is exactly 7, 0.1 of 10 exactly 1.
class RatioThreshold {
 public:
  static constexpr std::int64_t kScale = 1'000'000'000;

  explicit RatioThreshold(double value) : scaled_(Scale(value)) {}

  double value() const {
    return static_cast<double>(scaled_) / static_cast<double>(kScale);
  }
  bool is_zero() const { return scaled_ == 0; }

  // count >= threshold * size
  bool Reached(std::uint64_t count, std::uint64_t size) const {
    return count * kScale >= static_cast<std::uint64_t>(scaled_) * size;
  }
  // count > threshold * size
  bool Exceeded(std::uint64_t count, std::uint64_t size) const {
    return count * kScale > static_cast<std::uint64_t>(scaled_) * size;
  }

 private:
  static std::int64_t Scale(double value) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::invalid_argument("threshold must lie in [0, 1], got " +
                                  std::to_string(value));
    }
    return std::llround(value * static_cast<double>(kScale));
  }

  std::int64_t scaled_;
};

}  // namespace commdet

#endif  // COMMDET_THRESHOLD_H_
