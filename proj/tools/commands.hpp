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

#ifndef CGD_TOOLS_COMMANDS_HPP_
#define CGD_TOOLS_COMMANDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace cgd::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertionFailed = 1,
  kUsageError = 2,
  kIoError = 3,
};

struct RunConfig {
  std::string command;
  std::string dynamics;
  std::string input;
  std::string output;  // file or directory, depending on the command
  std::size_t steps = 1;
  std::size_t max_vertices = 4;
  std::string family;
  std::optional<int> exception_bound;
  bool trace = false;
  bool render = false;
  std::string caption;
};

// Each command writes its artifacts and a key=value summary to `out`, and
// returns an ExitCode. Library errors propagate as exceptions.
int RunCommand(const RunConfig& cfg, std::ostream& out);

}  // namespace cgd::cli

#endif  // CGD_TOOLS_COMMANDS_HPP_
