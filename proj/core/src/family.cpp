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

#include "cgd/family.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>
#include <utility>

#include "cgd/dynamics.hpp"
#include "cgd/error.hpp"
#include "cgd/modulo.hpp"

namespace cgd {

GraphFamily::GraphFamily(AlphabetPtr alphabet,
                         std::vector<CanonicalGraph> members)
    : alphabet_(std::move(alphabet)) {
  std::sort(members.begin(), members.end());
  for (CanonicalGraph& g : members) {
    if (!SameAlphabet(alphabet_, g.alphabet())) {
      throw Error("family member uses a different alphabet");
    }
    if (index_.count(g)) continue;
    index_.emplace(g, members_.size());
    members_.push_back(std::move(g));
  }
}

bool GraphFamily::contains(const CanonicalGraph& g) const {
  return index_.count(g) != 0;
}

std::optional<std::size_t> GraphFamily::index_of(
    const CanonicalGraph& g) const {
  auto it = index_.find(g);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t DefaultEnumerationCap() {
  if (const char* env = std::getenv("CGD_ENUM_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 2'000'000;
}

namespace {

std::vector<LabelId> Choices(std::size_t count) {
  if (count == 0) return {kNoLabel};
  std::vector<LabelId> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(static_cast<LabelId>(i));
  return out;
}

void CheckCap(std::size_t size, std::size_t cap) {
  if (size > cap) {
    throw ResourceLimit("enumeration exceeded the cap of " +
                        std::to_string(cap) +
                        " graphs (set CGD_ENUM_CAP to raise it)");
  }
}

GraphFamily Finish(const AlphabetPtr& alphabet,
                   std::vector<CanonicalGraph> graphs,
                   const GraphPredicate& filter) {
  if (filter) {
    graphs.erase(std::remove_if(graphs.begin(), graphs.end(),
                                [&](const CanonicalGraph& g) {
                                  return !filter(g);
                                }),
                 graphs.end());
  }
  return GraphFamily(alphabet, std::move(graphs));
}

}  // namespace

GraphFamily EnumerateFamily(const AlphabetPtr& alphabet,
                            const EnumerationOptions& options) {
  if (options.max_vertices < 1) throw Error("max_vertices must be >= 1");
  const std::size_t cap = options.cap ? options.cap : DefaultEnumerationCap();
  const auto ports = static_cast<PortId>(alphabet->port_count());
  const std::vector<LabelId> vlabels = Choices(alphabet->vertex_label_count());
  const std::vector<LabelId> elabels = Choices(alphabet->edge_label_count());

  std::unordered_set<CanonicalGraph, CanonicalGraphHash> seen;
  std::vector<CanonicalGraph> kept, frontier;
  auto offer = [&](const PortGraph& pg, std::vector<CanonicalGraph>& next) {
    CanonicalGraph g = std::move(Canonicalize(alphabet, pg, 0).graph);
    if (!seen.insert(g).second) return;
    CheckCap(seen.size(), cap);
    if (options.prune && !options.prune(g)) return;
    kept.push_back(g);
    next.push_back(std::move(g));
  };

  for (LabelId l : vlabels) {
    PortGraph pg(ports);
    pg.add_vertex(l);
    offer(pg, frontier);
  }
  while (!frontier.empty()) {
    std::vector<CanonicalGraph> next;
    for (const CanonicalGraph& g : frontier) {
      const auto n = static_cast<VertexIndex>(g.vertex_count());
      std::vector<std::pair<VertexIndex, PortId>> free;
      for (VertexIndex v = 0; v < n; ++v) {
        for (PortId p = 0; p < ports; ++p) {
          if (!g.slot(v, p).used()) free.emplace_back(v, p);
        }
      }
      for (std::size_t i = 0; i < free.size(); ++i) {
        for (std::size_t j = i + 1; j < free.size(); ++j) {
          for (LabelId e : elabels) {
            PortGraph pg = g.graph();
            pg.connect(free[i].first, free[i].second, free[j].first,
                       free[j].second, e);
            offer(pg, next);
          }
        }
      }
      if (static_cast<std::size_t>(n) >= options.max_vertices) continue;
      for (const auto& [v, p] : free) {
        for (PortId q = 0; q < ports; ++q) {
          for (LabelId l : vlabels) {
            for (LabelId e : elabels) {
              PortGraph pg = g.graph();
              const VertexIndex w = pg.add_vertex(l);
              pg.connect(v, p, w, q, e);
              offer(pg, next);
            }
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return Finish(alphabet, std::move(kept), options.filter);
}

GraphFamily BruteForceFamily(const AlphabetPtr& alphabet,
                             std::size_t max_vertices, std::size_t cap) {
  if (max_vertices < 1) throw Error("max_vertices must be >= 1");
  if (cap == 0) cap = DefaultEnumerationCap();
  const auto ports = static_cast<PortId>(alphabet->port_count());
  const std::vector<LabelId> vlabels = Choices(alphabet->vertex_label_count());
  const std::vector<LabelId> elabels = Choices(alphabet->edge_label_count());
  std::unordered_set<CanonicalGraph, CanonicalGraphHash> seen;

  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::size_t halves = n * static_cast<std::size_t>(ports);
    // partner[h] = matched half-edge or -1; labels[h] = edge label.
    std::vector<int> partner(halves, -2);
    std::vector<LabelId> elabel(halves, kNoLabel);
    std::vector<LabelId> vlabel(n, vlabels.front());

    auto emit = [&] {
      PortGraph pg(ports);
      for (std::size_t v = 0; v < n; ++v) pg.add_vertex(vlabel[v]);
      for (std::size_t h = 0; h < halves; ++h) {
        const int o = partner[h];
        if (o < 0 || static_cast<std::size_t>(o) < h) continue;
        pg.connect(static_cast<VertexIndex>(h / ports),
                   static_cast<PortId>(h % ports),
                   static_cast<VertexIndex>(o / ports),
                   static_cast<PortId>(o % ports), elabel[h]);
      }
      for (int d : pg.Distances(0)) {
        if (d < 0) return;
      }
      for (std::size_t v = 0; v < n; ++v) {
        seen.insert(std::move(
            Canonicalize(alphabet, pg, static_cast<VertexIndex>(v)).graph));
        CheckCap(seen.size(), cap);
      }
    };
    std::function<void(std::size_t)> match = [&](std::size_t h) {
      while (h < halves && partner[h] != -2) ++h;
      if (h == halves) {
        emit();
        return;
      }
      partner[h] = -1;
      match(h + 1);
      for (std::size_t o = h + 1; o < halves; ++o) {
        if (partner[o] != -2) continue;
        for (LabelId e : elabels) {
          partner[h] = static_cast<int>(o);
          partner[o] = static_cast<int>(h);
          elabel[h] = elabel[o] = e;
          match(h + 1);
          partner[o] = -2;
        }
      }
      partner[h] = -2;
      elabel[h] = kNoLabel;
    };
    std::function<void(std::size_t)> label = [&](std::size_t v) {
      if (v == n) {
        match(0);
        return;
      }
      for (LabelId l : vlabels) {
        vlabel[v] = l;
        label(v + 1);
      }
    };
    label(0);
  }
  return GraphFamily(alphabet, std::vector<CanonicalGraph>(seen.begin(),
                                                           seen.end()));
}

// ---------------------------------------------------------------------------

namespace {

constexpr PortId kA = 0, kB = 1, kC = 2, kD = 3;

PortGraph Tape(int length) {
  PortGraph pg(4);
  for (int i = 0; i < length; ++i) pg.add_vertex(0);
  for (int i = 0; i + 1 < length; ++i) pg.connect(i, kA, i + 1, kB);
  return pg;
}

}  // namespace

CanonicalGraph BareTape(int length, int pointer) {
  if (length < 1 || pointer < 0 || pointer >= length) {
    throw Error("bad tape parameters");
  }
  return std::move(
      Canonicalize(MovingHeadAlphabet(), Tape(length), pointer).graph);
}

CanonicalGraph SingleHeadTape(int length, int head_cell, bool forward,
                              int pointer) {
  if (length < 1 || head_cell < 0 || head_cell >= length || pointer < 0 ||
      pointer > length) {
    throw Error("bad tape parameters");
  }
  PortGraph pg = Tape(length);
  const VertexIndex h = pg.add_vertex(0);
  const PortId p = forward ? kC : kD;
  pg.connect(h, p, head_cell, p);
  return std::move(Canonicalize(MovingHeadAlphabet(), pg, pointer).graph);
}

bool IsSingleHeadTape(const CanonicalGraph& g) {
  if (!SameAlphabet(g.alphabet(), MovingHeadAlphabet())) return false;
  const PortGraph& pg = g.graph();
  const auto n = static_cast<VertexIndex>(pg.vertex_count());
  if (n < 2 || pg.edge_count() != static_cast<std::size_t>(n - 1)) {
    return false;
  }
  VertexIndex head = kNoVertex;
  for (VertexIndex v = 1; v < n; ++v) {
    if (pg.degree(v) != 1) continue;
    for (PortId p : {kC, kD}) {
      const Slot& s = pg.slot(v, p);
      if (s.used() && s.port == p && s.vertex != v) {
        if (head != kNoVertex) return false;
        head = v;
      }
    }
  }
  if (head == kNoVertex) return false;
  if (pg.slot(0, kB).used()) return false;
  std::vector<bool> seen(n, false);
  VertexIndex t = 0;
  int cells = 0;
  while (true) {
    seen[t] = true;
    ++cells;
    for (PortId p : {kC, kD}) {
      const Slot& s = pg.slot(t, p);
      if (s.used() && s.vertex != head) return false;
    }
    const Slot& s = pg.slot(t, kA);
    if (!s.used()) break;
    if (s.port != kB || s.vertex == head || seen[s.vertex]) return false;
    t = s.vertex;
  }
  return cells == n - 1;
}

GraphFamily SingleHeadTapes(int max_length) {
  std::vector<CanonicalGraph> out;
  for (int len = 1; len <= max_length; ++len) {
    for (int cell = 0; cell < len; ++cell) {
      for (bool fwd : {true, false}) {
        out.push_back(SingleHeadTape(len, cell, fwd, 0));
      }
    }
  }
  return GraphFamily(MovingHeadAlphabet(), std::move(out));
}

GraphFamily SingleHeadTapesPointed(int max_length) {
  std::vector<CanonicalGraph> out;
  for (int len = 1; len <= max_length; ++len) {
    for (int cell = 0; cell < len; ++cell) {
      for (bool fwd : {true, false}) {
        for (int ptr = 0; ptr <= len; ++ptr) {
          out.push_back(SingleHeadTape(len, cell, fwd, ptr));
        }
      }
    }
  }
  return GraphFamily(MovingHeadAlphabet(), std::move(out));
}

GraphFamily HeadRings(int max_vertices) {
  std::vector<CanonicalGraph> out;
  for (int len = 1; len <= max_vertices; ++len) {
    std::vector<int> heads(len, 0);  // 0 none, 1 cc, 2 dd
    while (true) {
      int count = 0;
      for (int h : heads) count += h != 0;
      if (len + count <= max_vertices) {
        PortGraph pg(4);
        for (int i = 0; i < len; ++i) pg.add_vertex(0);
        for (int i = 0; i < len; ++i) pg.connect(i, kA, (i + 1) % len, kB);
        for (int i = 0; i < len; ++i) {
          if (heads[i] == 0) continue;
          const PortId p = heads[i] == 1 ? kC : kD;
          pg.connect(pg.add_vertex(0), p, i, p);
        }
        for (VertexIndex v = 0; v < static_cast<VertexIndex>(pg.vertex_count());
             ++v) {
          out.push_back(
              std::move(Canonicalize(MovingHeadAlphabet(), pg, v).graph));
        }
      }
      int i = 0;
      while (i < len && heads[i] == 2) heads[i++] = 0;
      if (i == len) break;
      ++heads[i];
    }
  }
  return GraphFamily(MovingHeadAlphabet(), std::move(out));
}

CanonicalGraph Grid(int rows, int cols, const std::vector<LabelId>& labels,
                    int pointer_row, int pointer_col) {
  if (rows < 1 || cols < 1 ||
      labels.size() != static_cast<std::size_t>(rows * cols) ||
      pointer_row < 0 || pointer_row >= rows || pointer_col < 0 ||
      pointer_col >= cols) {
    throw Error("bad grid parameters");
  }
  PortGraph pg(4);
  for (LabelId l : labels) pg.add_vertex(l);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int v = i * cols + j;
      if (j + 1 < cols) pg.connect(v, kB, v + 1, kD);
      if (i + 1 < rows) pg.connect(v, kC, v + cols, kA);
    }
  }
  return std::move(
      Canonicalize(GridAlphabet(), pg, pointer_row * cols + pointer_col)
          .graph);
}

namespace {

GraphFamily GridsBounded(int max_side, int max_cells, bool all_pointers) {
  std::vector<CanonicalGraph> out;
  for (int r = 1; r <= max_side; ++r) {
    for (int c = 1; c <= max_side; ++c) {
      if (r * c > max_cells) continue;
      const int cells = r * c;
      for (unsigned mask = 0; mask < (1u << cells); ++mask) {
        std::vector<LabelId> labels(cells);
        for (int k = 0; k < cells; ++k) labels[k] = (mask >> k) & 1u;
        if (!all_pointers) {
          out.push_back(Grid(r, c, labels));
          continue;
        }
        for (int i = 0; i < r; ++i) {
          for (int j = 0; j < c; ++j) out.push_back(Grid(r, c, labels, i, j));
        }
      }
    }
  }
  return GraphFamily(GridAlphabet(), std::move(out));
}

}  // namespace

GraphFamily Grids(int max_side, bool all_pointers) {
  return GridsBounded(max_side, max_side * max_side, all_pointers);
}

std::vector<std::string> FamilyNames() {
  return {"all",  "symmetric",  "asymmetric",  "single-head-tape",
          "single-head-tape-pointed", "head-ring", "grid", "grid-pointed"};
}

GraphFamily NamedFamily(const std::string& name, const AlphabetPtr& alphabet,
                        std::size_t size) {
  if (size < 1) throw Error("family size must be >= 1");
  const int n = static_cast<int>(size);
  auto need = [&](const AlphabetPtr& a) {
    if (!SameAlphabet(alphabet, a)) {
      throw Error("family " + name + " does not fit this alphabet");
    }
  };
  if (name == "all" || name == "symmetric" || name == "asymmetric") {
    EnumerationOptions opt;
    opt.max_vertices = size;
    if (name == "symmetric") {
      opt.filter = [](const CanonicalGraph& g) { return !IsAsymmetric(g); };
    } else if (name == "asymmetric") {
      opt.filter = IsAsymmetric;
    }
    return EnumerateFamily(alphabet, opt);
  }
  if (name == "single-head-tape" || name == "single-head-tape-pointed") {
    need(MovingHeadAlphabet());
    if (n < 2) return GraphFamily(MovingHeadAlphabet(), {});
    return name == "single-head-tape" ? SingleHeadTapes(n - 1)
                                      : SingleHeadTapesPointed(n - 1);
  }
  if (name == "head-ring") {
    need(MovingHeadAlphabet());
    return HeadRings(n);
  }
  if (name == "grid" || name == "grid-pointed") {
    need(GridAlphabet());
    return GridsBounded(std::min(n, 3), n, name == "grid-pointed");
  }
  throw Error("unknown family '" + name + "'");
}

}  // namespace cgd
