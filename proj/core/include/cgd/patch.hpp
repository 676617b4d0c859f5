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

#ifndef CGD_PATCH_HPP_
#define CGD_PATCH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgd/alphabet.hpp"
#include "cgd/error.hpp"
#include "cgd/path.hpp"

namespace cgd {

// A formal vertex name: a path together with a tag. Tag 0 names the vertex
// at that path itself; tags 1..k name fresh vertices created on its behalf.
struct Token {
  Path path;
  std::uint32_t tag = 0;
  friend bool operator==(const Token&, const Token&) = default;
  friend std::strong_ordering operator<=>(const Token&, const Token&) = default;
};

// Sorted, duplicate-free.
using TokenSet = std::vector<Token>;
TokenSet MakeTokenSet(std::vector<Token> tokens);

// "path" for tag 0, "path#k" otherwise; sets are joined with '+'.
std::string FormatToken(const Alphabet& alphabet, const Token& t);
std::string FormatTokenSet(const Alphabet& alphabet, const TokenSet& s);
TokenSet ParseTokenSet(const Alphabet& alphabet, std::string_view text);

struct PatchVertex {
  TokenSet tokens;
  LabelId label = kNoLabel;
};

struct PatchEdge {
  std::size_t first = 0;
  PortId first_port = 0;
  std::size_t second = 0;
  PortId second_port = 0;
  LabelId label = kNoLabel;
};

// A small port graph whose vertices are named by pairwise disjoint token
// sets, as produced by a local rule. Labels may be absent.
class Patch {
 public:
  explicit Patch(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<PatchVertex>& vertices() const { return vertices_; }
  const std::vector<PatchEdge>& edges() const { return edges_; }

  // Throws Error if the set is empty or shares a token with a vertex that
  // is already present.
  std::size_t add_vertex(TokenSet tokens, LabelId label = kNoLabel);
  // Throws Error if either half-edge is taken or both are the same.
  void add_edge(std::size_t a, PortId pa, std::size_t b, PortId pb,
                LabelId label = kNoLabel);

  std::optional<std::size_t> vertex_with_token(const Token& t) const;
  // Index of the edge using half-edge (v, p), if any.
  std::optional<std::size_t> edge_at(std::size_t v, PortId p) const;

  // The vertex a local rule designates as the centre's successor.
  std::optional<std::size_t> successor() const { return successor_; }
  void set_successor(std::size_t v);

 private:
  AlphabetPtr alphabet_;
  std::vector<PatchVertex> vertices_;
  std::vector<PatchEdge> edges_;
  std::optional<std::size_t> successor_;
  std::map<Token, std::size_t> by_token_;
  std::map<std::pair<std::size_t, PortId>, std::size_t> by_half_edge_;

  friend Patch Union(const Patch& g, const Patch& h);
};

// The four consistency conditions: (i) vertex sets that intersect are
// equal; (ii) a half-edge used in both patches belongs to the same edge in
// both; (iii) shared edges agree on labels defined in both; (iv) shared
// vertices agree on labels defined in both.
CheckResult Consistent(const Patch& g, const Patch& h);

// Union of vertices, edges and labels. Throws Error if not Consistent.
// The successor of `g` is kept.
Patch Union(const Patch& g, const Patch& h);

}  // namespace cgd

#endif  // CGD_PATCH_HPP_
