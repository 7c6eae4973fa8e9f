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

#ifndef COMMDET_ERRORS_H_
#define COMMDET_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace commdet {

// Base class for all recoverable library errors. Invalid parameters are
// reported with std::invalid_argument and out-of-range node indices with
// std::out_of_range; everything else derives from Error.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A missing or unreadable file.
class InputError : public Error {
 public:
  using Error::Error;
};

// A malformed record in an input file. The message names the file and the
// 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(const std::string& path, std::size_t line,
             const std::string& what)
      : InputError(path + ":" + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A configured resource cap (clique count, k-clique count) was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The wall-clock budget of a run expired.
class TimeoutError : public ResourceError {
 public:
  using ResourceError::ResourceError;
};

}  // namespace commdet

#endif  // COMMDET_ERRORS_H_
