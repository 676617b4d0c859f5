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

#include "cgd/path.hpp"

#include <algorithm>

#include "cgd/error.hpp"

namespace cgd {

Path Path::Reversed() const {
  std::vector<PortPair> out;
  out.reserve(steps_.size());
  for (auto it = steps_.rbegin(); it != steps_.rend(); ++it) {
    out.push_back(PortPair{it->in, it->out});
  }
  return Path(std::move(out));
}

Path Path::Then(const Path& suffix) const {
  std::vector<PortPair> out = steps_;
  out.insert(out.end(), suffix.steps_.begin(), suffix.steps_.end());
  return Path(std::move(out));
}

Path Path::Then(PortPair step) const {
  std::vector<PortPair> out = steps_;
  out.push_back(step);
  return Path(std::move(out));
}

std::size_t Path::Hash() const {
  std::size_t h = steps_.size();
  for (const PortPair& p : steps_) {
    h = h * 1000003u + static_cast<std::size_t>(p.out) * 131u +
        static_cast<std::size_t>(p.in);
  }
  return h;
}

std::strong_ordering operator<=>(const Path& a, const Path& b) {
  if (a.size() != b.size()) return a.size() <=> b.size();
  return std::lexicographical_compare_three_way(
      a.steps_.begin(), a.steps_.end(), b.steps_.begin(), b.steps_.end());
}

std::string FormatPath(const Alphabet& alphabet, const Path& path) {
  if (path.empty()) return "eps";
  std::string out;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) out += '.';
    out += alphabet.port_name(path[i].out);
    if (!alphabet.compact_ports()) out += ',';
    out += alphabet.port_name(path[i].in);
  }
  return out;
}

namespace {

PortId PortOrThrow(const Alphabet& alphabet, std::string_view name,
                   std::string_view text) {
  auto p = alphabet.find_port(name);
  if (!p) {
    throw ParseError(0, "unknown port '" + std::string(name) + "' in path '" +
                            std::string(text) + "'");
  }
  return *p;
}

}  // namespace

Path ParsePath(const Alphabet& alphabet, std::string_view text) {
  if (text == "eps") return Path();
  if (text.empty()) throw ParseError(0, "empty path");
  Path out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t dot = text.find('.', start);
    if (dot == std::string_view::npos) dot = text.size();
    const std::string_view pair = text.substr(start, dot - start);
    const std::size_t comma = pair.find(',');
    if (comma != std::string_view::npos) {
      out.push_back(
          PortPair{PortOrThrow(alphabet, pair.substr(0, comma), text),
                   PortOrThrow(alphabet, pair.substr(comma + 1), text)});
    } else if (pair.size() == 2) {
      out.push_back(PortPair{PortOrThrow(alphabet, pair.substr(0, 1), text),
                             PortOrThrow(alphabet, pair.substr(1, 1), text)});
    } else {
      throw ParseError(0, "malformed port pair '" + std::string(pair) +
                              "' in path '" + std::string(text) + "'");
    }
    start = dot + 1;
  }
  return out;
}

}  // namespace cgd
