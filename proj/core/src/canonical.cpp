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

#include "cgd/canonical.hpp"

#include <algorithm>

#include "cgd/error.hpp"

namespace cgd {

VertexIndex CanonicalGraph::find_name(const Path& name) const {
  // Names are strictly increasing with the index.
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name) return kNoVertex;
  return static_cast<VertexIndex>(it - names_.begin());
}

Canonicalized Canonicalize(const AlphabetPtr& alphabet, const PortGraph& g,
                           VertexIndex origin) {
  const std::size_t n = g.vertex_count();
  const auto ports = static_cast<PortId>(g.port_count());
  if (origin < 0 || static_cast<std::size_t>(origin) >= n) {
    throw Error("origin out of range");
  }

  // Breadth-first search visiting parents in canonical order and their ports
  // in port order: the first discovery of a vertex is through its least
  // shortest path, so discovery order is canonical order.
  std::vector<VertexIndex> order;
  std::vector<VertexIndex> map(n, kNoVertex);
  std::vector<Path> names;
  order.reserve(n);
  map[origin] = 0;
  order.push_back(origin);
  names.emplace_back();
  for (std::size_t head = 0; head < order.size(); ++head) {
    const VertexIndex v = order[head];
    for (PortId p = 0; p < ports; ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used() || map[s.vertex] != kNoVertex) continue;
      map[s.vertex] = static_cast<VertexIndex>(order.size());
      order.push_back(s.vertex);
      names.push_back(names[head].Then(PortPair{p, s.port}));
    }
  }

  Canonicalized out;
  CanonicalGraph& c = out.graph;
  c.alphabet_ = alphabet;
  c.graph_ = PortGraph(g.port_count());
  for (VertexIndex v : order) c.graph_.add_vertex(g.label(v));
  for (VertexIndex i = 0; i < static_cast<VertexIndex>(order.size()); ++i) {
    const VertexIndex v = order[i];
    for (PortId p = 0; p < ports; ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used()) continue;
      const VertexIndex j = map[s.vertex];
      if (std::make_pair(j, s.port) < std::make_pair(i, p)) continue;
      c.graph_.connect(i, p, j, s.port, s.label);
    }
  }
  c.names_ = std::move(names);
  c.hash_ = c.graph_.Hash();
  out.index_map = std::move(map);
  return out;
}

CanonicalGraph Canonicalize(const PointedRawGraph& g) {
  const PortGraph pg = ToPortGraph(g.graph);
  const auto origin = static_cast<VertexIndex>(g.graph.index_of(g.origin));
  Canonicalized c = Canonicalize(g.graph.alphabet(), pg, origin);
  if (c.graph.vertex_count() != pg.vertex_count()) {
    throw Error("graph is not connected");
  }
  return std::move(c.graph);
}

PointedRawGraph ToRawGraph(const CanonicalGraph& g) {
  const Alphabet& alpha = *g.alphabet();
  RawGraph raw(g.alphabet());
  std::vector<std::string> ids;
  ids.reserve(g.vertex_count());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count());
       ++v) {
    ids.push_back(FormatPath(alpha, g.name(v)));
    const LabelId l = g.label(v);
    raw.add_vertex(ids.back(),
                   l == kNoLabel ? std::nullopt : std::optional<LabelId>(l));
  }
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count());
       ++v) {
    for (PortId p = 0; p < static_cast<PortId>(g.port_count()); ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used() ||
          std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      raw.add_edge(ids[v], p, ids[s.vertex], s.port,
                   s.label == kNoLabel ? std::nullopt
                                       : std::optional<LabelId>(s.label));
    }
  }
  return PointedRawGraph{std::move(raw), ids.empty() ? "" : ids.front()};
}

}  // namespace cgd
