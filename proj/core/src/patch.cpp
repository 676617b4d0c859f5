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

#include "cgd/patch.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace cgd {

TokenSet MakeTokenSet(std::vector<Token> tokens) {
  std::sort(tokens.begin(), tokens.end());
  tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
  return tokens;
}

std::string FormatToken(const Alphabet& alphabet, const Token& t) {
  std::string out = FormatPath(alphabet, t.path);
  if (t.tag != 0) out += "#" + std::to_string(t.tag);
  return out;
}

std::string FormatTokenSet(const Alphabet& alphabet, const TokenSet& s) {
  std::string out;
  for (const Token& t : s) {
    if (!out.empty()) out += "+";
    out += FormatToken(alphabet, t);
  }
  return out;
}

TokenSet ParseTokenSet(const Alphabet& alphabet, std::string_view text) {
  std::vector<Token> tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('+', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view part = text.substr(start, end - start);
    if (part.empty()) throw ParseError(0, "empty token in '" +
                                              std::string(text) + "'");
    Token t;
    const std::size_t hash = part.find('#');
    if (hash != std::string_view::npos) {
      const std::string_view digits = part.substr(hash + 1);
      if (digits.empty() ||
          !std::all_of(digits.begin(), digits.end(),
                       [](char c) { return c >= '0' && c <= '9'; }) ||
          digits.size() > 9) {
        throw ParseError(0, "bad token tag in '" + std::string(part) + "'");
      }
      t.tag = static_cast<std::uint32_t>(std::stoul(std::string(digits)));
      part = part.substr(0, hash);
    }
    t.path = ParsePath(alphabet, part);
    tokens.push_back(std::move(t));
    start = end + 1;
  }
  return MakeTokenSet(std::move(tokens));
}

// ---------------------------------------------------------------------------

std::size_t Patch::add_vertex(TokenSet tokens, LabelId label) {
  if (tokens.empty()) throw Error("patch vertex needs at least one token");
  tokens = MakeTokenSet(std::move(tokens));
  for (const Token& t : tokens) {
    if (vertex_with_token(t)) {
      throw Error("token " + FormatToken(*alphabet_, t) +
                  " already names a patch vertex");
    }
  }
  const std::size_t index = vertices_.size();
  for (const Token& t : tokens) by_token_.emplace(t, index);
  vertices_.push_back(PatchVertex{std::move(tokens), label});
  return index;
}

void Patch::add_edge(std::size_t a, PortId pa, std::size_t b, PortId pb,
                     LabelId label) {
  if (a >= vertices_.size() || b >= vertices_.size()) {
    throw Error("patch edge endpoint out of range");
  }
  if (a == b && pa == pb) throw Error("patch edge joins a half-edge to itself");
  if (edge_at(a, pa) || edge_at(b, pb)) {
    throw Error("patch half-edge already used");
  }
  by_half_edge_.emplace(std::make_pair(a, pa), edges_.size());
  by_half_edge_.emplace(std::make_pair(b, pb), edges_.size());
  edges_.push_back(PatchEdge{a, pa, b, pb, label});
}

std::optional<std::size_t> Patch::vertex_with_token(const Token& t) const {
  auto it = by_token_.find(t);
  if (it == by_token_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Patch::edge_at(std::size_t v, PortId p) const {
  auto it = by_half_edge_.find({v, p});
  if (it == by_half_edge_.end()) return std::nullopt;
  return it->second;
}

void Patch::set_successor(std::size_t v) {
  if (v >= vertices_.size()) throw Error("successor out of range");
  successor_ = v;
}

// ---------------------------------------------------------------------------

namespace {

using HalfEdgeKey = std::pair<TokenSet, PortId>;

// Far end of every half-edge, keyed by the near vertex's token set.
std::map<HalfEdgeKey, std::pair<HalfEdgeKey, LabelId>> HalfEdges(
    const Patch& p) {
  std::map<HalfEdgeKey, std::pair<HalfEdgeKey, LabelId>> out;
  for (const PatchEdge& e : p.edges()) {
    HalfEdgeKey a{p.vertices()[e.first].tokens, e.first_port};
    HalfEdgeKey b{p.vertices()[e.second].tokens, e.second_port};
    out[a] = {b, e.label};
    out[b] = {a, e.label};
  }
  return out;
}

}  // namespace

CheckResult Consistent(const Patch& g, const Patch& h) {
  const Alphabet& alpha = *g.alphabet();
  auto name = [&](const TokenSet& s) { return FormatTokenSet(alpha, s); };
  for (const PatchVertex& x : h.vertices()) {
    for (const Token& t : x.tokens) {
      const auto i = g.vertex_with_token(t);
      if (!i) continue;
      const PatchVertex& y = g.vertices()[*i];
      if (y.tokens != x.tokens) {
        return CheckResult::Fail("(i) vertices " + name(y.tokens) + " and " +
                                 name(x.tokens) + " overlap but differ");
      }
      if (y.label != kNoLabel && x.label != kNoLabel && y.label != x.label) {
        return CheckResult::Fail("(iv) vertex " + name(x.tokens) +
                                 " has two different labels");
      }
    }
  }
  const auto gh = HalfEdges(g);
  for (const auto& [key, far] : HalfEdges(h)) {
    auto it = gh.find(key);
    if (it == gh.end()) continue;
    const std::string where =
        name(key.first) + ":" + alpha.port_name(key.second);
    if (it->second.first != far.first) {
      return CheckResult::Fail("(ii) half-edge " + where +
                               " belongs to different edges");
    }
    if (it->second.second != kNoLabel && far.second != kNoLabel &&
        it->second.second != far.second) {
      return CheckResult::Fail("(iii) edge at " + where +
                               " has two different labels");
    }
  }
  return CheckResult::Pass();
}

Patch Union(const Patch& g, const Patch& h) {
  if (CheckResult r = Consistent(g, h); !r) {
    throw Error("union of inconsistent patches: " + r.detail());
  }
  Patch out = g;
  std::vector<std::size_t> map(h.vertices().size());
  for (std::size_t i = 0; i < h.vertices().size(); ++i) {
    const PatchVertex& x = h.vertices()[i];
    if (auto j = out.vertex_with_token(x.tokens.front())) {
      map[i] = *j;
      if (x.label != kNoLabel) out.vertices_[*j].label = x.label;
    } else {
      map[i] = out.add_vertex(x.tokens, x.label);
    }
  }
  for (const PatchEdge& e : h.edges()) {
    const std::size_t a = map[e.first], b = map[e.second];
    if (auto k = out.edge_at(a, e.first_port)) {
      if (e.label != kNoLabel) out.edges_[*k].label = e.label;
      continue;
    }
    out.add_edge(a, e.first_port, b, e.second_port, e.label);
  }
  if (!out.successor() && h.successor()) out.set_successor(map[*h.successor()]);
  return out;
}

}  // namespace cgd
