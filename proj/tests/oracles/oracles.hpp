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

#ifndef CGD_TESTS_ORACLES_HPP_
#define CGD_TESTS_ORACLES_HPP_

// Reference implementations used to cross-check the library. Each one is
// written from the definitions directly and shares no code with core/
// beyond the plain PortGraph container.

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "cgd/portgraph.hpp"

namespace cgd::oracle {

// Pointed isomorphism by propagation: in a connected port graph the image
// of the origin fixes the image of every neighbour through the ports, so a
// single breadth-first walk either builds the bijection or fails.
inline bool PointedIsomorphic(const PortGraph& g, VertexIndex go,
                              const PortGraph& h, VertexIndex ho) {
  if (g.port_count() != h.port_count()) return false;
  const auto ports = static_cast<PortId>(g.port_count());
  std::map<VertexIndex, VertexIndex> fwd, bwd;
  std::queue<VertexIndex> todo;
  fwd[go] = ho;
  bwd[ho] = go;
  todo.push(go);
  while (!todo.empty()) {
    const VertexIndex v = todo.front();
    todo.pop();
    const VertexIndex w = fwd[v];
    if (g.label(v) != h.label(w)) return false;
    for (PortId p = 0; p < ports; ++p) {
      const Slot& a = g.slot(v, p);
      const Slot& b = h.slot(w, p);
      if (a.used() != b.used()) return false;
      if (!a.used()) continue;
      if (a.port != b.port || a.label != b.label) return false;
      auto f = fwd.find(a.vertex);
      auto r = bwd.find(b.vertex);
      if (f == fwd.end() && r == bwd.end()) {
        fwd[a.vertex] = b.vertex;
        bwd[b.vertex] = a.vertex;
        todo.push(a.vertex);
      } else if (f == fwd.end() || r == bwd.end() || f->second != b.vertex) {
        return false;
      }
    }
  }
  // Both sides must be exhausted: the components have the same size.
  std::size_t hv = 0;
  for (int d : h.Distances(ho)) hv += d >= 0;
  return fwd.size() == hv;
}

// Relabels vertices by `perm` (old -> new).
inline PortGraph Permute(const PortGraph& g,
                         const std::vector<VertexIndex>& perm) {
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  std::vector<VertexIndex> inv(n);
  for (VertexIndex v = 0; v < n; ++v) inv[perm[v]] = v;
  PortGraph out(g.port_count());
  for (VertexIndex v = 0; v < n; ++v) out.add_vertex(g.label(inv[v]));
  for (VertexIndex v = 0; v < n; ++v) {
    for (PortId p = 0; p < static_cast<PortId>(g.port_count()); ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used() || std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      out.connect(perm[v], p, perm[s.vertex], s.port, s.label);
    }
  }
  return out;
}

// A random connected port graph: a random spanning tree plus extra edges.
inline PortGraph RandomConnected(std::mt19937& rng, int n, int ports,
                                 int vlabels, int elabels) {
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  PortGraph g(ports);
  g.add_vertex(vlabels ? pick(vlabels) : kNoLabel);
  auto free_of = [&](VertexIndex v) {
    std::vector<PortId> out;
    for (PortId p = 0; p < ports; ++p) {
      if (!g.slot(v, p).used()) out.push_back(p);
    }
    return out;
  };
  for (int i = 1; i < n; ++i) {
    std::vector<std::pair<VertexIndex, PortId>> cand;
    for (VertexIndex v = 0; v < i; ++v) {
      for (PortId p : free_of(v)) cand.emplace_back(v, p);
    }
    if (cand.empty()) break;
    auto [v, p] = cand[pick(static_cast<int>(cand.size()))];
    const VertexIndex w = g.add_vertex(vlabels ? pick(vlabels) : kNoLabel);
    g.connect(v, p, w, static_cast<PortId>(pick(ports)),
              elabels ? pick(elabels) : kNoLabel);
  }
  const int extra = pick(n + 1);
  for (int k = 0; k < extra; ++k) {
    std::vector<std::pair<VertexIndex, PortId>> cand;
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      for (PortId p : free_of(v)) cand.emplace_back(v, p);
    }
    if (cand.size() < 2) break;
    const int i = pick(static_cast<int>(cand.size()));
    int j = pick(static_cast<int>(cand.size()) - 1);
    if (j >= i) ++j;
    g.connect(cand[i].first, cand[i].second, cand[j].first, cand[j].second,
              elabels ? pick(elabels) : kNoLabel);
  }
  return g;
}

// Moving head on a line, as an array position: cell index and direction.
struct TapeState {
  int length = 1;
  int cell = 0;
  bool forward = true;
  friend bool operator==(const TapeState&, const TapeState&) = default;
};

inline TapeState TapeStep(TapeState s) {
  if (s.length < 2) return s;  // a single cell is not a tape
  if (s.forward) {
    if (s.cell + 1 < s.length) {
      ++s.cell;
    } else {
      s.forward = false;
    }
  } else {
    if (s.cell > 0) {
      --s.cell;
    } else {
      s.forward = true;
    }
  }
  return s;
}

inline TapeState TapeStepBack(TapeState s) {
  if (s.length < 2) return s;
  if (s.forward) {
    if (s.cell > 0) {
      --s.cell;
    } else {
      s.forward = false;
    }
  } else {
    if (s.cell + 1 < s.length) {
      ++s.cell;
    } else {
      s.forward = true;
    }
  }
  return s;
}

// Coordinates of a labelled grid, inflated: cell (i, j) becomes the 2x2
// block with corners (2i, 2j) .. (2i+1, 2j+1).
inline std::vector<int> InflateLabels(int rows, int cols,
                                      const std::vector<int>& labels) {
  std::vector<int> out(4 * rows * cols);
  for (int i = 0; i < 2 * rows; ++i) {
    for (int j = 0; j < 2 * cols; ++j) {
      out[i * 2 * cols + j] = labels[(i / 2) * cols + (j / 2)];
    }
  }
  return out;
}

// Set-based patch model: vertices are sets of ints, edges are unordered
// pairs of (vertex, port) half-edges.
struct SetPatch {
  std::map<std::set<int>, int> vertices;  // label, -1 for none
  // half-edge -> (other half-edge, edge label)
  std::map<std::pair<std::set<int>, int>,
           std::pair<std::pair<std::set<int>, int>, int>>
      half;
};

inline bool SetConsistent(const SetPatch& g, const SetPatch& h) {
  for (const auto& [x, lx] : g.vertices) {
    for (const auto& [y, ly] : h.vertices) {
      std::vector<int> common;
      std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                            std::back_inserter(common));
      if (!common.empty() && x != y) return false;
      if (x == y && lx >= 0 && ly >= 0 && lx != ly) return false;
    }
  }
  for (const auto& [k, v] : g.half) {
    auto it = h.half.find(k);
    if (it == h.half.end()) continue;
    if (it->second.first != v.first) return false;
    if (v.second >= 0 && it->second.second >= 0 && v.second != it->second.second) {
      return false;
    }
  }
  return true;
}

// Marked port graphs use port 2p+bit and label 2(l+1)+bit. Marks the
// vertex `at`: every half-edge (v, j) facing it moves to (v, j^1) and its
// own mark bit flips. Returns nullopt when some (v, j^1) is already taken.
inline std::optional<PortGraph> MarkAt(const PortGraph& g, VertexIndex at) {
  std::vector<std::pair<VertexIndex, PortId>> facing;
  for (PortId i = 0; i < static_cast<PortId>(g.port_count()); ++i) {
    const Slot& s = g.slot(at, i);
    if (s.used()) facing.emplace_back(s.vertex, s.port);
  }
  for (const auto& [v, j] : facing) {
    if (g.slot(v, j ^ 1).used()) return std::nullopt;
  }
  PortGraph out(g.port_count());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    const LabelId l = g.label(v);
    out.add_vertex(v == at && l != kNoLabel ? static_cast<LabelId>(l ^ 1) : l);
  }
  auto moved = [&](VertexIndex v, PortId j) {
    const bool faces = std::find(facing.begin(), facing.end(),
                                 std::make_pair(v, j)) != facing.end();
    return faces ? static_cast<PortId>(j ^ 1) : j;
  };
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
    for (PortId p = 0; p < static_cast<PortId>(g.port_count()); ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used() || std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      out.connect(v, moved(v, p), s.vertex, moved(s.vertex, s.port), s.label);
    }
  }
  return out;
}

}  // namespace cgd::oracle

#endif  // CGD_TESTS_ORACLES_HPP_
