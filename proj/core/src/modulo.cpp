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

#include "cgd/modulo.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "cgd/error.hpp"

namespace cgd {

std::optional<VertexIndex> Walk(const CanonicalGraph& g, VertexIndex from,
                                const Path& path) {
  VertexIndex cur = from;
  const auto ports = static_cast<PortId>(g.port_count());
  for (const PortPair& step : path.steps()) {
    if (step.out < 0 || step.out >= ports) return std::nullopt;
    const Slot& s = g.slot(cur, step.out);
    if (!s.used() || s.port != step.in) return std::nullopt;
    cur = s.vertex;
  }
  return cur;
}

std::optional<VertexIndex> Resolve(const CanonicalGraph& g, const Path& path) {
  if (g.vertex_count() == 0) return std::nullopt;
  return Walk(g, 0, path);
}

Canonicalized ShiftTo(const CanonicalGraph& g, VertexIndex v) {
  return Canonicalize(g.alphabet(), g.graph(), v);
}

CanonicalGraph Shift(const CanonicalGraph& g, const Path& u) {
  auto v = Resolve(g, u);
  if (!v) {
    throw Error("path " + FormatPath(*g.alphabet(), u) +
                " does not resolve in the graph");
  }
  if (*v == 0) return g;
  return std::move(ShiftTo(g, *v).graph);
}

DiskGraph Disk(const CanonicalGraph& g, int radius) {
  if (radius < 0) throw Error("negative radius");
  std::vector<VertexIndex> keep;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count());
       ++v) {
    if (g.distance(v) <= radius + 1) keep.push_back(v);
  }
  // Canonical numbering is by distance, so `keep` is a prefix and the
  // induced graph stays canonically numbered.
  std::vector<VertexIndex> map;
  PortGraph sub = g.graph().Induced(keep, &map);
  for (VertexIndex v : keep) {
    const VertexIndex nv = map[v];
    if (g.distance(v) > radius) sub.set_label(nv, kNoLabel);
    for (PortId p = 0; p < static_cast<PortId>(g.port_count()); ++p) {
      const Slot& s = sub.slot(nv, p);
      if (!s.used() || s.label == kNoLabel) continue;
      if (g.distance(v) > radius || g.distance(keep[s.vertex]) > radius) {
        sub.set_edge_label(nv, p, kNoLabel);
      }
    }
  }
  return DiskGraph{std::move(Canonicalize(g.alphabet(), sub, 0).graph),
                   radius};
}

DiskGraph DiskAround(const CanonicalGraph& g, VertexIndex v, int radius) {
  if (v == 0) return Disk(g, radius);
  return Disk(ShiftTo(g, v).graph, radius);
}

std::vector<std::size_t> ShiftEquivalenceClassIndex(const CanonicalGraph& g) {
  std::unordered_map<CanonicalGraph, std::size_t, CanonicalGraphHash> seen;
  std::vector<std::size_t> out(g.vertex_count());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count());
       ++v) {
    auto [it, inserted] = seen.emplace(ShiftTo(g, v).graph, seen.size());
    out[v] = it->second;
  }
  return out;
}

std::vector<std::vector<VertexIndex>> ShiftEquivalenceClasses(
    const CanonicalGraph& g) {
  const std::vector<std::size_t> idx = ShiftEquivalenceClassIndex(g);
  std::size_t count = 0;
  for (std::size_t c : idx) count = std::max(count, c + 1);
  std::vector<std::vector<VertexIndex>> out(count);
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(idx.size()); ++v) {
    out[idx[v]].push_back(v);
  }
  return out;
}

bool IsAsymmetric(const CanonicalGraph& g) {
  for (const auto& c : ShiftEquivalenceClasses(g)) {
    if (c.size() != 1) return false;
  }
  return true;
}

bool IsPrime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::size_t NextPrimeAbove(std::size_t n) {
  std::size_t p = n + 1;
  while (!IsPrime(p)) ++p;
  return p;
}

namespace {

struct Host {
  VertexIndex vertex = kNoVertex;
  // Edge to remove first, given as one of its half-edges; port -1 if the
  // host already has a free port.
  PortId remove_port = -1;
};

bool ConnectedWithout(const PortGraph& g, VertexIndex v, PortId p) {
  PortGraph copy = g;
  copy.disconnect(v, p);
  for (int d : copy.Distances(0)) {
    if (d < 0) return false;
  }
  return true;
}

std::optional<Host> FindHost(const CanonicalGraph& g) {
  std::vector<VertexIndex> order(g.vertex_count());
  std::iota(order.begin(), order.end(), 0);
  // Canonical index order is name order; sort by distance descending and
  // keep name order within a layer.
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexIndex a, VertexIndex b) {
                     return g.distance(a) > g.distance(b);
                   });
  const auto ports = static_cast<PortId>(g.port_count());
  for (VertexIndex v : order) {
    for (PortId p = 0; p < ports; ++p) {
      if (!g.slot(v, p).used()) return Host{v, -1};
    }
  }
  for (VertexIndex v : order) {
    // Candidate edges ranked by their (smaller, larger) half-edge pair,
    // greatest first.
    std::vector<std::pair<std::pair<VertexIndex, PortId>,
                          std::pair<VertexIndex, PortId>>>
        edges;
    for (PortId p = 0; p < ports; ++p) {
      const Slot& s = g.slot(v, p);
      auto a = std::make_pair(v, p);
      auto b = std::make_pair(s.vertex, s.port);
      if (b < a) std::swap(a, b);
      edges.emplace_back(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
      if (ConnectedWithout(g.graph(), it->first.first, it->first.second)) {
        const PortId at_host =
            it->first.first == v ? it->first.second : it->second.second;
        return Host{v, at_host};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool HasPrimalHost(const CanonicalGraph& g) {
  return g.port_count() >= 2 && FindHost(g).has_value();
}

CanonicalGraph PrimalExtension(const CanonicalGraph& g,
                               PrimalExtensionOptions options) {
  if (g.port_count() < 2) {
    throw Error("primal extension needs at least two ports");
  }
  if (!options.force && IsAsymmetric(g)) {
    throw Error("graph has no non-trivial shift-equivalence class");
  }
  const std::optional<Host> host = FindHost(g);
  if (!host) throw Error("no host vertex: no free port and no cycle edge");

  PortGraph pg = g.graph();
  if (host->remove_port >= 0) pg.disconnect(host->vertex, host->remove_port);
  PortId free_port = -1;
  for (PortId p = 0; p < static_cast<PortId>(pg.port_count()); ++p) {
    if (!pg.slot(host->vertex, p).used()) {
      free_port = p;
      break;
    }
  }

  const std::size_t n = g.vertex_count();
  const std::size_t p = NextPrimeAbove(n + 2);
  const LabelId fresh_label =
      g.alphabet()->vertex_label_count() > 0 ? LabelId{0} : kNoLabel;
  VertexIndex prev = host->vertex;
  PortId prev_port = free_port;
  for (std::size_t i = n; i < p; ++i) {
    const VertexIndex w = pg.add_vertex(fresh_label);
    pg.connect(prev, prev_port, w, 0);
    prev = w;
    prev_port = 1;
  }
  return std::move(Canonicalize(g.alphabet(), pg, 0).graph);
}

}  // namespace cgd
