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

#include "cgd/portgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>
#include <utility>

namespace cgd {

VertexIndex PortGraph::add_vertex(LabelId label) {
  labels_.push_back(label);
  slots_.resize(slots_.size() + port_count_);
  return static_cast<VertexIndex>(labels_.size() - 1);
}

void PortGraph::connect(VertexIndex u, PortId a, VertexIndex v, PortId b,
                        LabelId label) {
  if (u == v && a == b) throw Error("edge joins a half-edge to itself");
  Slot& su = mutable_slot(u, a);
  Slot& sv = mutable_slot(v, b);
  if (su.used() || sv.used()) throw Error("port already in use");
  su = Slot{v, b, label};
  sv = Slot{u, a, label};
}

void PortGraph::disconnect(VertexIndex v, PortId p) {
  Slot& s = mutable_slot(v, p);
  if (!s.used()) return;
  mutable_slot(s.vertex, s.port) = Slot{};
  s = Slot{};
}

void PortGraph::set_edge_label(VertexIndex v, PortId p, LabelId label) {
  Slot& s = mutable_slot(v, p);
  if (!s.used()) throw Error("no edge at port");
  mutable_slot(s.vertex, s.port).label = label;
  s.label = label;
}

std::size_t PortGraph::degree(VertexIndex v) const {
  std::size_t d = 0;
  for (PortId p = 0; p < static_cast<PortId>(port_count_); ++p) {
    if (slot(v, p).used()) ++d;
  }
  return d;
}

std::size_t PortGraph::edge_count() const {
  std::size_t half = 0;
  for (const auto& s : slots_) {
    if (s.used()) ++half;
  }
  return half / 2;
}

std::vector<int> PortGraph::Distances(VertexIndex origin) const {
  return Distances(std::vector<VertexIndex>{origin});
}

std::vector<int> PortGraph::Distances(
    const std::vector<VertexIndex>& sources) const {
  std::vector<int> dist(vertex_count(), -1);
  std::deque<VertexIndex> queue;
  for (VertexIndex s : sources) {
    if (dist[s] == -1) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const VertexIndex v = queue.front();
    queue.pop_front();
    for (PortId p = 0; p < static_cast<PortId>(port_count_); ++p) {
      const Slot& s = slot(v, p);
      if (s.used() && dist[s.vertex] == -1) {
        dist[s.vertex] = dist[v] + 1;
        queue.push_back(s.vertex);
      }
    }
  }
  return dist;
}

PortGraph PortGraph::Induced(const std::vector<VertexIndex>& keep,
                             std::vector<VertexIndex>* old_to_new) const {
  std::vector<VertexIndex> map(vertex_count(), kNoVertex);
  PortGraph out(port_count_);
  for (VertexIndex v : keep) map[v] = out.add_vertex(labels_[v]);
  for (VertexIndex v : keep) {
    for (PortId p = 0; p < static_cast<PortId>(port_count_); ++p) {
      const Slot& s = slot(v, p);
      if (!s.used() || map[s.vertex] == kNoVertex) continue;
      // Each edge once: from its smaller half-edge.
      if (std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) continue;
      out.connect(map[v], p, map[s.vertex], s.port, s.label);
    }
  }
  if (old_to_new != nullptr) *old_to_new = std::move(map);
  return out;
}

std::vector<std::vector<VertexIndex>> PortGraph::Components() const {
  std::vector<std::vector<VertexIndex>> out;
  std::vector<bool> seen(vertex_count(), false);
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(vertex_count()); ++v) {
    if (seen[v]) continue;
    std::vector<VertexIndex> comp;
    std::deque<VertexIndex> queue{v};
    seen[v] = true;
    while (!queue.empty()) {
      const VertexIndex x = queue.front();
      queue.pop_front();
      comp.push_back(x);
      for (PortId p = 0; p < static_cast<PortId>(port_count_); ++p) {
        const Slot& s = slot(x, p);
        if (s.used() && !seen[s.vertex]) {
          seen[s.vertex] = true;
          queue.push_back(s.vertex);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t PortGraph::Hash() const {
  std::size_t h = 0xcbf29ce484222325ULL ^ port_count_;
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  };
  mix(labels_.size());
  for (LabelId l : labels_) mix(static_cast<std::size_t>(l + 1));
  for (const Slot& s : slots_) {
    mix(static_cast<std::size_t>(s.vertex + 1));
    mix(static_cast<std::size_t>(s.port + 1) |
        (static_cast<std::size_t>(s.label + 1) << 16));
  }
  return h;
}

bool operator<(const PortGraph& a, const PortGraph& b) {
  auto key = [](const PortGraph& g) {
    return std::make_tuple(g.labels_.size(), g.port_count_);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  if (a.labels_ != b.labels_) return a.labels_ < b.labels_;
  return std::lexicographical_compare(
      a.slots_.begin(), a.slots_.end(), b.slots_.begin(), b.slots_.end(),
      [](const Slot& x, const Slot& y) {
        return std::tie(x.vertex, x.port, x.label) <
               std::tie(y.vertex, y.port, y.label);
      });
}

// ---------------------------------------------------------------------------

void RawGraph::add_vertex(std::string id, std::optional<LabelId> label) {
  index_.emplace(id, vertices_.size());
  vertices_.push_back(std::move(id));
  labels_.push_back(label);
}

void RawGraph::add_edge(std::string u, PortId a, std::string v, PortId b,
                        std::optional<LabelId> label) {
  edges_.push_back(
      RawEdge{RawHalfEdge{std::move(u), a}, RawHalfEdge{std::move(v), b},
              label});
}

bool RawGraph::has_vertex(std::string_view id) const {
  return index_.count(std::string(id)) != 0;
}

std::size_t RawGraph::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) {
    throw Error("unknown vertex id '" + std::string(id) + "'");
  }
  return it->second;
}

std::vector<RawEdge> RawGraph::SortedEdges() const {
  using Key = std::pair<std::size_t, PortId>;
  auto key = [this](const RawHalfEdge& h) {
    return Key{index_of(h.vertex), h.port};
  };
  std::vector<RawEdge> out = edges_;
  for (auto& e : out) {
    if (key(e.second) < key(e.first)) std::swap(e.first, e.second);
  }
  std::sort(out.begin(), out.end(), [&](const RawEdge& x, const RawEdge& y) {
    return std::make_pair(key(x.first), key(x.second)) <
           std::make_pair(key(y.first), key(y.second));
  });
  return out;
}

CheckResult Validate(const RawGraph& g) {
  const Alphabet& alpha = *g.alphabet();
  std::set<std::string> ids;
  for (std::size_t i = 0; i < g.vertices().size(); ++i) {
    const std::string& id = g.vertices()[i];
    if (!ids.insert(id).second) {
      return CheckResult::Fail("vertex id " + id + " declared twice");
    }
    const auto& label = g.labels()[i];
    if (label && (*label < 0 ||
                  static_cast<std::size_t>(*label) >=
                      alpha.vertex_label_count())) {
      return CheckResult::Fail("vertex " + id + " has a label outside the "
                               "vertex label alphabet");
    }
  }
  std::set<std::pair<std::string, PortId>> used;
  for (const RawEdge& e : g.edges()) {
    for (const RawHalfEdge* h : {&e.first, &e.second}) {
      if (!g.has_vertex(h->vertex)) {
        return CheckResult::Fail("edge uses undeclared vertex " + h->vertex);
      }
      if (h->port < 0 ||
          static_cast<std::size_t>(h->port) >= alpha.port_count()) {
        return CheckResult::Fail("edge at vertex " + h->vertex +
                                 " uses a port outside the port alphabet");
      }
    }
    if (e.label && (*e.label < 0 || static_cast<std::size_t>(*e.label) >=
                                        alpha.edge_label_count())) {
      return CheckResult::Fail("edge at " + e.first.vertex + ":" +
                               alpha.port_name(e.first.port) +
                               " has a label outside the edge label alphabet");
    }
    if (e.first.vertex == e.second.vertex && e.first.port == e.second.port) {
      return CheckResult::Fail("edge joins " + e.first.vertex + ":" +
                               alpha.port_name(e.first.port) + " to itself");
    }
    for (const RawHalfEdge* h : {&e.first, &e.second}) {
      if (!used.emplace(h->vertex, h->port).second) {
        return CheckResult::Fail("port " + h->vertex + ":" +
                                 alpha.port_name(h->port) + " used twice");
      }
    }
  }
  return CheckResult::Pass();
}

RawGraph ConnectedComponent(const RawGraph& g, std::string_view v) {
  const std::size_t start = g.index_of(v);
  const std::size_t n = g.vertices().size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const RawEdge& e : g.edges()) {
    if (!g.has_vertex(e.first.vertex) || !g.has_vertex(e.second.vertex)) {
      continue;
    }
    const std::size_t a = g.index_of(e.first.vertex);
    const std::size_t b = g.index_of(e.second.vertex);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> reach(n, false);
  std::deque<std::size_t> queue{start};
  reach[start] = true;
  while (!queue.empty()) {
    const std::size_t x = queue.front();
    queue.pop_front();
    for (std::size_t y : adj[x]) {
      if (!reach[y]) {
        reach[y] = true;
        queue.push_back(y);
      }
    }
  }
  RawGraph out(g.alphabet());
  for (std::size_t i = 0; i < n; ++i) {
    if (reach[i]) out.add_vertex(g.vertices()[i], g.labels()[i]);
  }
  for (const RawEdge& e : g.edges()) {
    if (g.has_vertex(e.first.vertex) && reach[g.index_of(e.first.vertex)]) {
      out.add_edge(e.first.vertex, e.first.port, e.second.vertex,
                   e.second.port, e.label);
    }
  }
  return out;
}

PortGraph ToPortGraph(const RawGraph& g) {
  if (CheckResult r = Validate(g); !r) throw Error(r.detail());
  PortGraph out(g.alphabet()->port_count());
  for (const auto& l : g.labels()) out.add_vertex(l.value_or(kNoLabel));
  for (const RawEdge& e : g.edges()) {
    out.connect(static_cast<VertexIndex>(g.index_of(e.first.vertex)),
                e.first.port,
                static_cast<VertexIndex>(g.index_of(e.second.vertex)),
                e.second.port, e.label.value_or(kNoLabel));
  }
  return out;
}

}  // namespace cgd
