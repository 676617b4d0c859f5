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

#ifndef CGD_PORTGRAPH_HPP_
#define CGD_PORTGRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cgd/alphabet.hpp"
#include "cgd/error.hpp"

namespace cgd {

using VertexIndex = int;
inline constexpr VertexIndex kNoVertex = -1;

// One port of one vertex: where its edge leads, if anywhere.
struct Slot {
  VertexIndex vertex = kNoVertex;
  PortId port = -1;
  LabelId label = kNoLabel;

  bool used() const { return vertex != kNoVertex; }
  friend bool operator==(const Slot&, const Slot&) = default;
};

// Index-based port graph: vertices 0..n-1, a fixed number of ports each.
// Port uniqueness holds by construction since every (vertex, port) owns a
// single slot. This is the working representation behind every operation;
// it carries no alphabet and no distinguished vertex.
class PortGraph {
 public:
  PortGraph() = default;
  explicit PortGraph(std::size_t port_count) : port_count_(port_count) {}

  std::size_t port_count() const { return port_count_; }
  std::size_t vertex_count() const { return labels_.size(); }

  VertexIndex add_vertex(LabelId label = kNoLabel);

  LabelId label(VertexIndex v) const { return labels_[v]; }
  void set_label(VertexIndex v, LabelId label) { labels_[v] = label; }

  const Slot& slot(VertexIndex v, PortId p) const {
    return slots_[static_cast<std::size_t>(v) * port_count_ + p];
  }

  // Throws Error if either half-edge is already used, or if the two
  // half-edges are the same one.
  void connect(VertexIndex u, PortId a, VertexIndex v, PortId b,
               LabelId label = kNoLabel);
  // Removes the edge at (v, p); no-op if the port is free.
  void disconnect(VertexIndex v, PortId p);
  void set_edge_label(VertexIndex v, PortId p, LabelId label);

  std::size_t degree(VertexIndex v) const;
  std::size_t edge_count() const;

  // Breadth-first distances from `origin`; -1 for unreachable vertices.
  std::vector<int> Distances(VertexIndex origin) const;
  std::vector<int> Distances(const std::vector<VertexIndex>& sources) const;

  // Induced subgraph on `keep` (in the given order); returns the graph and
  // writes the old->new index map (kNoVertex for dropped vertices).
  PortGraph Induced(const std::vector<VertexIndex>& keep,
                    std::vector<VertexIndex>* old_to_new = nullptr) const;

  // Vertex sets of the connected components, each sorted ascending, ordered
  // by their least member.
  std::vector<std::vector<VertexIndex>> Components() const;

  std::size_t Hash() const;

  friend bool operator==(const PortGraph&, const PortGraph&) = default;
  friend bool operator<(const PortGraph& a, const PortGraph& b);

 private:
  Slot& mutable_slot(VertexIndex v, PortId p) {
    return slots_[static_cast<std::size_t>(v) * port_count_ + p];
  }

  std::size_t port_count_ = 0;
  std::vector<LabelId> labels_;
  std::vector<Slot> slots_;
};

// ---------------------------------------------------------------------------
// Raw graphs with opaque vertex ids, as read from files or built by hand.

struct RawHalfEdge {
  std::string vertex;
  PortId port = 0;
};

struct RawEdge {
  RawHalfEdge first;
  RawHalfEdge second;
  std::optional<LabelId> label;
};

class RawGraph {
 public:
  explicit RawGraph(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }

  // Neither call checks anything; Validate() reports every kind of breach.
  void add_vertex(std::string id, std::optional<LabelId> label = {});
  void add_edge(std::string u, PortId a, std::string v, PortId b,
                std::optional<LabelId> label = {});

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::optional<LabelId>>& labels() const { return labels_; }
  const std::vector<RawEdge>& edges() const { return edges_; }

  bool has_vertex(std::string_view id) const;
  // Declaration index of `id`; throws Error for unknown ids.
  std::size_t index_of(std::string_view id) const;

  // Edges sorted by (min half-edge, max half-edge) where half-edges compare
  // by (declaration index, port index). Requires a valid graph.
  std::vector<RawEdge> SortedEdges() const;

 private:
  AlphabetPtr alphabet_;
  std::vector<std::string> vertices_;
  std::vector<std::optional<LabelId>> labels_;
  std::vector<RawEdge> edges_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct PointedRawGraph {
  RawGraph graph;
  std::string origin;
};

// Ok iff vertex ids are unique, every edge endpoint is declared, ports and
// labels belong to the alphabet, no half-edge is used twice and no edge
// joins a half-edge to itself. Otherwise names the first breach.
CheckResult Validate(const RawGraph& g);

// Subgraph induced on everything reachable from `v`, in declaration order.
// Throws Error for an unknown id.
RawGraph ConnectedComponent(const RawGraph& g, std::string_view v);

// Throws Error unless Validate(g) is ok. Vertex i of the result is the i-th
// declared vertex of g.
PortGraph ToPortGraph(const RawGraph& g);

}  // namespace cgd

#endif  // CGD_PORTGRAPH_HPP_
