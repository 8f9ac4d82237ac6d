// Copyright 2026 The RML Authors
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

#ifndef RML_ERROR_HPP_
#define RML_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace rml {

// Numeric values double as CLI exit codes where the CLI defines one.
enum class ErrorCode {
  kInvalidArgument = 1,
  kParse = 2,
  kDegreeCap = 3,
  kTimeLimit = 4,
  kInfeasible = 5,
  kImproper = 6,
  kDomain = 7,
  kSolver = 8,
  kSizeGuard = 9,
  kIo = 10,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures carry the 1-based line number of the offending input line
// (0 when the problem is not tied to a line, e.g. a missing monomial).
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorCode::kParse, format(line, message)), line_(line) {}

  int line() const { return line_; }

 private:
  static std::string format(int line, const std::string& message) {
    if (line <= 0) return "parse error: " + message;
    return "parse error at line " + std::to_string(line) + ": " + message;
  }

  int line_;
};

}  // namespace rml

#endif  // RML_ERROR_HPP_
