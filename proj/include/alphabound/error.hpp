// Copyright 2026 The alphabound Authors
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

#ifndef ALPHABOUND_ERROR_HPP_
#define ALPHABOUND_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace alphabound {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A graph does not belong to the class a bound or construction requires.
class ClassError : public Error {
 public:
  using Error::Error;
};

// Malformed input text; line is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

  // Same error with `prefix` (typically a file name) prepended to the message.
  ParseError with_prefix(const std::string& prefix) const {
    return ParseError(prefix + what(), line_, Prefixed{});
  }

 private:
  struct Prefixed {};
  ParseError(const std::string& full_message, std::size_t line, Prefixed)
      : Error(full_message), line_(line) {}

  std::size_t line_;
};

}  // namespace alphabound

#endif  // ALPHABOUND_ERROR_HPP_
