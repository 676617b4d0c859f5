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

#ifndef CGD_PATH_HPP_
#define CGD_PATH_HPP_

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "cgd/alphabet.hpp"

namespace cgd {

// One step of a path: leave the current vertex through `out`, arrive at the
// next one through `in`. Ordered lexicographically on (out, in).
struct PortPair {
  PortId out = 0;
  PortId in = 0;

  friend auto operator<=>(const PortPair&, const PortPair&) = default;
};

// A word over port pairs naming a vertex relative to the origin. The empty
// path is the origin itself.
//
// Paths are ordered length-first, then lexicographically; under this order
// the canonical name of a vertex is the least path reaching it.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<PortPair> steps) : steps_(std::move(steps)) {}

  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }
  const std::vector<PortPair>& steps() const { return steps_; }
  const PortPair& operator[](std::size_t i) const { return steps_[i]; }

  void push_back(PortPair p) { steps_.push_back(p); }

  // (a1,b1)...(an,bn) -> (bn,an)...(b1,a1).
  Path Reversed() const;
  Path Then(const Path& suffix) const;
  Path Then(PortPair step) const;

  std::size_t Hash() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b);

 private:
  std::vector<PortPair> steps_;
};

struct PathHash {
  std::size_t operator()(const Path& p) const { return p.Hash(); }
};

// "eps" for the empty path, otherwise dot-separated pairs: "ab.cd" when all
// ports are single characters, "a',b.c,d" otherwise.
std::string FormatPath(const Alphabet& alphabet, const Path& path);

// Inverse of FormatPath; throws ParseError on unknown ports or bad syntax.
Path ParsePath(const Alphabet& alphabet, std::string_view text);

}  // namespace cgd

#endif  // CGD_PATH_HPP_
