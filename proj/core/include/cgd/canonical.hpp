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

#ifndef CGD_CANONICAL_HPP_
#define CGD_CANONICAL_HPP_

#include <cstddef>
#include <vector>

#include "cgd/alphabet.hpp"
#include "cgd/path.hpp"
#include "cgd/portgraph.hpp"

namespace cgd {

// A pointed graph modulo isomorphism, stored in canonical form.
//
// Vertex 0 is the origin. Vertices are numbered in breadth-first order where
// each layer is sorted by canonical name, and the canonical name of a vertex
// is its least shortest path from the origin (length first, then
// lexicographic on port pairs). Since a path determines the vertex it
// reaches, this numbering is a complete invariant: two values are equal as
// pointed graphs modulo iff their port graphs are identical.
class CanonicalGraph {
 public:
  CanonicalGraph() = default;

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const PortGraph& graph() const { return graph_; }

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t port_count() const { return graph_.port_count(); }

  const Path& name(VertexIndex v) const { return names_[v]; }
  const std::vector<Path>& names() const { return names_; }
  // Distance from the origin; equals the length of the canonical name.
  int distance(VertexIndex v) const {
    return static_cast<int>(names_[v].size());
  }

  LabelId label(VertexIndex v) const { return graph_.label(v); }
  const Slot& slot(VertexIndex v, PortId p) const { return graph_.slot(v, p); }

  // Index of the vertex named exactly `name`, or kNoVertex.
  VertexIndex find_name(const Path& name) const;

  std::size_t hash() const { return hash_; }

  friend bool operator==(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.hash_ == b.hash_ && a.graph_ == b.graph_ &&
           SameAlphabet(a.alphabet_, b.alphabet_);
  }
  friend bool operator<(const CanonicalGraph& a, const CanonicalGraph& b) {
    return a.graph_ < b.graph_;
  }

 private:
  friend struct Canonicalized Canonicalize(const AlphabetPtr&,
                                           const PortGraph&, VertexIndex);

  AlphabetPtr alphabet_;
  PortGraph graph_;
  std::vector<Path> names_;
  std::size_t hash_ = 0;
};

struct CanonicalGraphHash {
  std::size_t operator()(const CanonicalGraph& g) const { return g.hash(); }
};

// A canonical form together with where every input vertex went
// (kNoVertex for vertices outside the origin's component).
struct Canonicalized {
  CanonicalGraph graph;
  std::vector<VertexIndex> index_map;
};

// Canonical form of the component of `origin` in `g`.
Canonicalized Canonicalize(const AlphabetPtr& alphabet, const PortGraph& g,
                           VertexIndex origin);

// Canonical form of a pointed raw graph. Throws Error if the graph is
// invalid, the origin is unknown, or the graph is not connected.
CanonicalGraph Canonicalize(const PointedRawGraph& g);

// A raw presentation whose vertex ids are the formatted canonical names.
PointedRawGraph ToRawGraph(const CanonicalGraph& g);

}  // namespace cgd

#endif  // CGD_CANONICAL_HPP_
