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

#ifndef CGD_TEXT_FORMAT_HPP_
#define CGD_TEXT_FORMAT_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cgd/canonical.hpp"
#include "cgd/portgraph.hpp"

namespace cgd {

// Line-oriented graph format:
//
//   # comment
//   ports a b c d
//   vlabels 0 1
//   elabels x
//   vertex <id> [label=<sigma>]
//   edge <id>:<port> <id>:<port> [label=<delta>]
//   pointer <id>
//
// Several documents can share a stream, separated by a line "---".
// Reading is strict: unknown ports or labels, undeclared vertices, reused
// half-edges and a missing pointer line are all ParseErrors.

struct TextLine {
  std::size_t number = 0;
  std::vector<std::string> tokens;
};

// Splits into whitespace-separated tokens, dropping comments and blank
// lines.
std::vector<TextLine> TokenizeLines(std::string_view text);

// Reads the ports/vlabels/elabels directives starting at `pos`.
AlphabetPtr ParseAlphabetHeader(const std::vector<TextLine>& lines,
                                std::size_t& pos);

// Reads vertex/edge/pointer directives starting at `pos`, stopping at the
// first other directive. The pointer is required iff `require_pointer`.
PointedRawGraph ParseGraphBody(const AlphabetPtr& alphabet,
                               const std::vector<TextLine>& lines,
                               std::size_t& pos, bool require_pointer);

PointedRawGraph ParseGraph(std::string_view text);
std::vector<PointedRawGraph> ParseGraphs(std::string_view text);

CanonicalGraph ParseCanonicalGraph(std::string_view text);
std::vector<CanonicalGraph> ParseCanonicalGraphs(std::string_view text);

std::string FormatAlphabetHeader(const Alphabet& alphabet);
// Vertices in declaration order, edges sorted by half-edge pair.
std::string FormatGraphBody(const PointedRawGraph& g, bool with_pointer);

std::string SerializeGraph(const PointedRawGraph& g);
// Uses canonical names as vertex ids.
std::string SerializeGraph(const CanonicalGraph& g);
std::string SerializeGraphs(std::span<const CanonicalGraph> graphs);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace cgd

#endif  // CGD_TEXT_FORMAT_HPP_
