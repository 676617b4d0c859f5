// Copyright 2026 The CGD Authors
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

#ifndef CGD_ERROR_HPP_
#define CGD_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace cgd {

// Raised when an operation's precondition does not hold (unknown vertex,
// unresolvable path, alphabet mismatch, inconsistent patches, ...).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Raised by the text readers. Carries the 1-based line number when known.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Raised when an exhaustive generator would exceed its configured size cap.
class ResourceLimit : public Error {
 public:
  explicit ResourceLimit(const std::string& what) : Error(what) {}
};

// Outcome of a checker: either ok, or a human-readable counterexample.
class CheckResult {
 public:
  static CheckResult Pass() { return CheckResult(true, {}); }
  static CheckResult Fail(std::string detail) {
    return CheckResult(false, std::move(detail));
  }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const std::string& detail() const { return detail_; }

 private:
  CheckResult(bool ok, std::string detail)
      : ok_(ok), detail_(std::move(detail)) {}

  bool ok_;
  std::string detail_;
};

}  // namespace cgd

#endif  // CGD_ERROR_HPP_
