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

#ifndef CGD_TESTS_UNIT_TEST_UTIL_HPP_
#define CGD_TESTS_UNIT_TEST_UTIL_HPP_

#include <string>

#include "cgd/canonical.hpp"
#include "cgd/text_format.hpp"

namespace cgd::testing {

// Graph over the given header lines plus body lines.
inline CanonicalGraph G(const std::string& header, const std::string& body) {
  return ParseCanonicalGraph(header + "\n" + body);
}

inline const char* kAB = "ports a b\nvlabels x\nelabels";
inline const char* kABCD = "ports a b c d\nvlabels x\nelabels";

}  // namespace cgd::testing

#endif  // CGD_TESTS_UNIT_TEST_UTIL_HPP_
