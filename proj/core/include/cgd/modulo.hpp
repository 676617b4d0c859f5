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

#ifndef CGD_MODULO_HPP_
#define CGD_MODULO_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cgd/canonical.hpp"
#include "cgd/path.hpp"

namespace cgd {

// Vertex reached by walking `path` from the origin: each step (a,b) leaves
// through port a and must arrive through port b. nullopt if a step fails.
std::optional<VertexIndex> Resolve(const CanonicalGraph& g, const Path& path);

// Walk from an arbitrary start vertex.
std::optional<VertexIndex> Walk(const CanonicalGraph& g, VertexIndex from,
                                const Path& path);

// The graph re-pointed at `v`, with the index map old -> new.
Canonicalized ShiftTo(const CanonicalGraph& g, VertexIndex v);

// The graph re-pointed at the vertex named by `u`. Throws Error if `u` does
// not resolve.
CanonicalGraph Shift(const CanonicalGraph& g, const Path& u);

// The disk of radius r around the origin: every vertex within distance r+1,
// all edges among them, vertex labels kept within distance r only and edge
// labels kept only when both ends are within distance r.
struct DiskGraph {
  CanonicalGraph graph;
  int radius = 0;

  friend bool operator==(const DiskGraph& a, const DiskGraph& b) {
    return a.radius == b.radius && a.graph == b.graph;
  }
};

DiskGraph Disk(const CanonicalGraph& g, int radius);

// Disk around an arbitrary vertex, i.e. Disk(ShiftTo(g, v), radius).
DiskGraph DiskAround(const CanonicalGraph& g, VertexIndex v, int radius);

// Partition of the vertices into shift-equivalence classes: u and v share a
// class iff re-pointing at u or at v gives the same graph. Classes are
// listed by least member; members ascend.
std::vector<std::vector<VertexIndex>> ShiftEquivalenceClasses(
    const CanonicalGraph& g);

// class_of[v] = index of v's class in ShiftEquivalenceClasses(g).
std::vector<std::size_t> ShiftEquivalenceClassIndex(const CanonicalGraph& g);

bool IsAsymmetric(const CanonicalGraph& g);

bool IsPrime(std::size_t n);
// Smallest prime strictly greater than n.
std::size_t NextPrimeAbove(std::size_t n);

struct PrimalExtensionOptions {
  // Accept inputs without non-trivial symmetry as well.
  bool force = false;
};

// Primal extension: attach a line of fresh vertices so that the total vertex
// count becomes p, the least prime above |V|+2.
//
// Host: among vertices ordered by decreasing distance then canonical name,
// the first one with a free port, or else the first one with an incident
// edge whose removal keeps the graph connected (the removed edge is the one
// with the greatest half-edge pair). The line attaches to the host's least
// free port through port 0 of the first new vertex; consecutive new
// vertices are joined port 1 -> port 0. New vertices carry the least vertex
// label, or none when the label alphabet is empty.
//
// Throws Error if |ports| < 2, if the graph is asymmetric and `force` is
// not set, or if no host exists.
CanonicalGraph PrimalExtension(const CanonicalGraph& g,
                               PrimalExtensionOptions options = {});

// True iff PrimalExtension would find a host.
bool HasPrimalHost(const CanonicalGraph& g);

}  // namespace cgd

#endif  // CGD_MODULO_HPP_
