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

#include "cgd/local_rule.hpp"

#include <utility>

#include "cgd/text_format.hpp"

namespace cgd {

LocalRule::LocalRule(std::string name, AlphabetPtr alphabet, int radius,
                     Function f)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      radius_(radius),
      fn_(std::make_shared<const Function>(std::move(f))) {
  if (radius < 0) throw Error("local rule radius must be non-negative");
}

namespace {

// Re-expresses a patch produced at vertex u in terms of X's canonical
// names.
Patch Translate(const CanonicalGraph& x, VertexIndex u, const Patch& p) {
  auto token = [&](const Token& t) {
    const auto w = Walk(x, u, t.path);
    if (!w) {
      throw Error("patch token " + FormatToken(*x.alphabet(), t) +
                  " does not resolve from " +
                  FormatPath(*x.alphabet(), x.name(u)));
    }
    return Token{x.name(*w), t.tag};
  };
  Patch out(x.alphabet());
  for (const PatchVertex& v : p.vertices()) {
    std::vector<Token> tokens;
    for (const Token& t : v.tokens) tokens.push_back(token(t));
    out.add_vertex(MakeTokenSet(std::move(tokens)), v.label);
  }
  for (const PatchEdge& e : p.edges()) {
    out.add_edge(e.first, e.first_port, e.second, e.second_port, e.label);
  }
  if (p.successor()) out.set_successor(*p.successor());
  return out;
}

}  // namespace

Step ApplyLocalRule(const LocalRule& f, const CanonicalGraph& x) {
  const Alphabet& alpha = *x.alphabet();
  if (f.alphabet() != nullptr && !SameAlphabet(f.alphabet(), x.alphabet())) {
    throw Error("local rule " + f.name() + ": graph uses a different alphabet");
  }
  const auto n = static_cast<VertexIndex>(x.vertex_count());
  std::vector<Patch> patches;
  std::vector<Token> successor(n);
  Patch acc(x.alphabet());
  for (VertexIndex u = 0; u < n; ++u) {
    const Patch local = f(DiskAround(x, u, f.radius()));
    if (!local.successor()) {
      throw Error("local rule " + f.name() + " gave no successor at " +
                  FormatPath(alpha, x.name(u)));
    }
    Patch p = Translate(x, u, local);
    successor[u] = p.vertices()[*p.successor()].tokens.front();
    if (CheckResult r = Consistent(acc, p); !r) {
      for (VertexIndex v = 0; v < u; ++v) {
        if (CheckResult rv = Consistent(patches[v], p); !rv) {
          throw Error("patches at " + FormatPath(alpha, x.name(v)) + " and " +
                      FormatPath(alpha, x.name(u)) +
                      " are inconsistent: " + rv.detail());
        }
      }
      throw Error("patch at " + FormatPath(alpha, x.name(u)) +
                  " is inconsistent with the union so far: " + r.detail());
    }
    acc = Union(acc, p);
    patches.push_back(std::move(p));
  }

  PortGraph g(x.port_count());
  for (const PatchVertex& v : acc.vertices()) g.add_vertex(v.label);
  for (const PatchEdge& e : acc.edges()) {
    g.connect(static_cast<VertexIndex>(e.first), e.first_port,
              static_cast<VertexIndex>(e.second), e.second_port, e.label);
  }
  const auto origin =
      static_cast<VertexIndex>(*acc.vertex_with_token(successor[0]));
  Canonicalized c = Canonicalize(x.alphabet(), g, origin);
  Correspondence r(n);
  for (VertexIndex u = 0; u < n; ++u) {
    r[u] = c.index_map[*acc.vertex_with_token(successor[u])];
    if (r[u] == kNoVertex) {
      throw Error("successor of " + FormatPath(alpha, x.name(u)) +
                  " is disconnected from the image origin");
    }
  }
  return Step{std::move(c.graph), std::move(r)};
}

Dynamics AsDynamics(const LocalRule& f) {
  return Dynamics(f.name(), f.alphabet(),
                  [f](const CanonicalGraph& x) { return ApplyLocalRule(f, x); })
      .WithRadius(f.radius());
}

LocalRule IdentityLocalRule(AlphabetPtr alphabet) {
  return LocalRule("identity-local", std::move(alphabet), 0,
                   [](const DiskGraph& d) {
                     const CanonicalGraph& g = d.graph;
                     Patch p(g.alphabet());
                     for (VertexIndex v = 0;
                          v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
                       p.add_vertex({Token{g.name(v), 0}}, g.label(v));
                     }
                     for (VertexIndex v = 0;
                          v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
                       for (PortId q = 0;
                            q < static_cast<PortId>(g.port_count()); ++q) {
                         const Slot& s = g.slot(v, q);
                         if (!s.used() || std::make_pair(s.vertex, s.port) <
                                              std::make_pair(v, q)) {
                           continue;
                         }
                         p.add_edge(v, q, s.vertex, s.port, s.label);
                       }
                     }
                     p.set_successor(0);
                     return p;
                   });
}

LocalRule InflatingGridLocalRule() {
  // Children NW, NE, SW, SE of the vertex at path p are tokens (p, 1..4).
  static constexpr int kSide[4][2] = {{0, 1}, {1, 3}, {2, 3}, {0, 2}};
  return LocalRule(
      "inflating-grid-local", GridAlphabet(), 0, [](const DiskGraph& d) {
        const CanonicalGraph& g = d.graph;
        Patch p(g.alphabet());
        std::vector<std::size_t> centre(4);
        for (std::uint32_t k = 0; k < 4; ++k) {
          centre[k] = p.add_vertex({Token{Path(), k + 1}}, g.label(0));
        }
        p.add_edge(centre[0], 1, centre[1], 3);
        p.add_edge(centre[2], 1, centre[3], 3);
        p.add_edge(centre[0], 2, centre[2], 0);
        p.add_edge(centre[1], 2, centre[3], 0);
        for (PortId i = 0; i < 4; ++i) {
          const Slot& s = g.slot(0, i);
          if (!s.used()) continue;
          std::vector<std::size_t> far = centre;
          if (s.vertex != 0) {
            for (std::uint32_t k = 0; k < 4; ++k) {
              const Token t{g.name(s.vertex), k + 1};
              auto existing = p.vertex_with_token(t);
              far[k] = existing ? *existing : p.add_vertex({t});
            }
          } else if (s.port < i) {
            continue;  // self-loop, already added from its other end
          }
          for (int k = 0; k < 2; ++k) {
            p.add_edge(centre[kSide[i][k]], i, far[kSide[s.port][k]], s.port,
                       s.label);
          }
        }
        p.set_successor(centre[0]);
        return p;
      });
}

// ---------------------------------------------------------------------------

void LookupRule::add(DiskGraph disk, Patch patch) {
  if (disk.radius != radius_) throw Error("disk radius does not match rule");
  if (!patch.successor()) throw Error("rule patch has no successor");
  if (index_.count(disk.graph)) throw Error("duplicate rule left-hand side");
  index_.emplace(disk.graph, entries_.size());
  entries_.emplace_back(std::move(disk), std::move(patch));
}

const Patch& LookupRule::lookup(const DiskGraph& disk) const {
  auto it = index_.find(disk.graph);
  if (disk.radius != radius_ || it == index_.end()) {
    throw Error("no rule for disk:\n" +
                FormatGraphBody(ToRawGraph(disk.graph), true));
  }
  return entries_[it->second].second;
}

LocalRule LookupRule::ToLocalRule(std::string name) const {
  auto self = std::make_shared<const LookupRule>(*this);
  return LocalRule(std::move(name), alphabet_, radius_,
                   [self](const DiskGraph& d) { return self->lookup(d); });
}

LookupRule Tabulate(const LocalRule& f,
                    const std::vector<CanonicalGraph>& xs) {
  if (xs.empty()) throw Error("nothing to tabulate");
  LookupRule table(xs.front().alphabet(), f.radius());
  for (const CanonicalGraph& x : xs) {
    for (VertexIndex u = 0; u < static_cast<VertexIndex>(x.vertex_count());
         ++u) {
      DiskGraph d = DiskAround(x, u, f.radius());
      try {
        table.lookup(d);
      } catch (const Error&) {
        Patch p = f(d);
        table.add(std::move(d), std::move(p));
      }
    }
  }
  return table;
}

// ---------------------------------------------------------------------------

namespace {

const TextLine& Expect(const std::vector<TextLine>& lines, std::size_t pos,
                       const std::string& keyword, std::size_t arity) {
  if (pos >= lines.size()) {
    throw ParseError(lines.empty() ? 0 : lines.back().number,
                     "expected '" + keyword + "' at end of file");
  }
  const TextLine& line = lines[pos];
  if (line.tokens[0] != keyword || line.tokens.size() != arity + 1) {
    throw ParseError(line.number, "expected '" + keyword + "'" +
                                      (arity ? " with " + std::to_string(arity) +
                                                   " argument"
                                             : std::string()));
  }
  return line;
}

Patch ToPatch(const AlphabetPtr& alphabet, const RawGraph& raw,
              std::size_t line) {
  Patch p(alphabet);
  try {
    for (std::size_t i = 0; i < raw.vertices().size(); ++i) {
      p.add_vertex(ParseTokenSet(*alphabet, raw.vertices()[i]),
                   raw.labels()[i].value_or(kNoLabel));
    }
    for (const RawEdge& e : raw.edges()) {
      p.add_edge(raw.index_of(e.first.vertex), e.first.port,
                 raw.index_of(e.second.vertex), e.second.port,
                 e.label.value_or(kNoLabel));
    }
  } catch (const ParseError& e) {
    throw ParseError(line, e.what());
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
  return p;
}

}  // namespace

LookupRule ParseRuleFile(std::string_view text) {
  const std::vector<TextLine> lines = TokenizeLines(text);
  std::size_t pos = 0;
  AlphabetPtr alphabet = ParseAlphabetHeader(lines, pos);
  const TextLine& rline = Expect(lines, pos++, "radius", 1);
  int radius = -1;
  try {
    radius = std::stoi(rline.tokens[1]);
  } catch (const std::exception&) {
  }
  if (radius < 0) throw ParseError(rline.number, "bad radius");
  LookupRule rule(alphabet, radius);
  while (pos < lines.size()) {
    const std::size_t start = Expect(lines, pos++, "rule", 0).number;
    PointedRawGraph lhs = ParseGraphBody(alphabet, lines, pos, true);
    CanonicalGraph disk;
    try {
      disk = Canonicalize(lhs);
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
    if (!(Disk(disk, radius).graph == disk)) {
      throw ParseError(start, "left-hand side is not a radius-" +
                                  std::to_string(radius) + " disk");
    }
    const std::size_t maps_to = Expect(lines, pos++, "maps-to", 0).number;
    PointedRawGraph rhs = ParseGraphBody(alphabet, lines, pos, false);
    if (!rhs.origin.empty()) {
      throw ParseError(maps_to, "patch must not have a pointer");
    }
    Patch patch = ToPatch(alphabet, rhs.graph, maps_to);
    const TextLine& succ = Expect(lines, pos++, "successor", 1);
    if (!rhs.graph.has_vertex(succ.tokens[1])) {
      throw ParseError(succ.number,
                       "successor " + succ.tokens[1] + " is not a patch vertex");
    }
    patch.set_successor(rhs.graph.index_of(succ.tokens[1]));
    Expect(lines, pos++, "end", 0);
    try {
      rule.add(DiskGraph{std::move(disk), radius}, std::move(patch));
    } catch (const Error& e) {
      throw ParseError(start, e.what());
    }
  }
  return rule;
}

std::string SerializeRuleFile(const LookupRule& rule) {
  const Alphabet& alpha = *rule.alphabet();
  std::string out = FormatAlphabetHeader(alpha);
  out += "radius " + std::to_string(rule.radius()) + "\n";
  for (const auto& [disk, patch] : rule.entries()) {
    out += "rule\n" + FormatGraphBody(ToRawGraph(disk.graph), true);
    out += "maps-to\n";
    std::vector<std::string> ids;
    for (const PatchVertex& v : patch.vertices()) {
      ids.push_back(FormatTokenSet(alpha, v.tokens));
      out += "vertex " + ids.back();
      if (v.label != kNoLabel) out += " label=" + alpha.vertex_label_name(v.label);
      out += "\n";
    }
    for (const PatchEdge& e : patch.edges()) {
      out += "edge " + ids[e.first] + ":" + alpha.port_name(e.first_port) +
             " " + ids[e.second] + ":" + alpha.port_name(e.second_port);
      if (e.label != kNoLabel) out += " label=" + alpha.edge_label_name(e.label);
      out += "\n";
    }
    out += "successor " + ids[*patch.successor()] + "\nend\n";
  }
  return out;
}

}  // namespace cgd
