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

#include "cgd/blocks.hpp"

#include <algorithm>
#include <deque>
#include <memory>
#include <unordered_set>
#include <utility>

#include "cgd/modulo.hpp"
#include "cgd/patch.hpp"
#include "cgd/reversibility.hpp"

namespace cgd {

// ---------------------------------------------------------------------------
// Shifted dynamics and products.

Step ShiftedApplyAt(const Dynamics& l, const CanonicalGraph& x,
                    VertexIndex u) {
  if (u == 0) return l.Apply(x);
  const Canonicalized xs = ShiftTo(x, u);
  const Step st = l.Apply(xs.graph);
  // The image of the old origin becomes the origin again.
  const VertexIndex back = st.correspondence[xs.index_map[0]];
  Canonicalized out = ShiftTo(st.image, back);
  Correspondence t(x.vertex_count());
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(t.size()); ++v) {
    t[v] = out.index_map[st.correspondence[xs.index_map[v]]];
  }
  return Step{std::move(out.graph), std::move(t)};
}

Step ShiftedApply(const Dynamics& l, const CanonicalGraph& x, const Path& u) {
  const auto v = Resolve(x, u);
  if (!v) return Step{x, IdentityCorrespondence(x.vertex_count())};
  return ShiftedApplyAt(l, x, *v);
}

Step Product(const Dynamics& l, const CanonicalGraph& x,
             const std::vector<Path>& anchors,
             std::vector<CanonicalGraph>* panels) {
  Step acc{x, IdentityCorrespondence(x.vertex_count())};
  for (const Path& a : anchors) {
    const auto v = Resolve(x, a);
    if (!v) continue;
    const Step st = ShiftedApplyAt(l, acc.image, acc.correspondence[*v]);
    acc.correspondence = Compose(acc.correspondence, st.correspondence);
    acc.image = st.image;
    if (panels) panels->push_back(acc.image);
  }
  return acc;
}

std::vector<Path> AllAnchors(const CanonicalGraph& x) { return x.names(); }

Dynamics ComposeDynamics(std::string name,
                         const std::vector<Dynamics>& stages) {
  if (stages.empty()) throw Error("nothing to compose");
  return Dynamics(std::move(name), stages.front().alphabet(),
                  [stages](const CanonicalGraph& x) {
                    Step acc{x, IdentityCorrespondence(x.vertex_count())};
                    for (const Dynamics& d : stages) {
                      const Step st = d.Apply(acc.image);
                      acc.correspondence =
                          Compose(acc.correspondence, st.correspondence);
                      acc.image = st.image;
                    }
                    return acc;
                  });
}

// ---------------------------------------------------------------------------
// Projections.

namespace {

bool HasMarkedPort(const CanonicalGraph& x, VertexIndex v) {
  for (PortId p = 0; p < static_cast<PortId>(x.port_count()); ++p) {
    if (x.slot(v, p).used() && PortBit(p) == 1) return true;
  }
  return false;
}

// Base-alphabet copy of a subgraph whose vertices are all unmarked and
// whose edges all use unmarked ports.
PortGraph DropPortGraph(const PortGraph& g, std::size_t base_ports) {
  PortGraph out(base_ports);
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  for (VertexIndex v = 0; v < n; ++v) {
    out.add_vertex(g.label(v) == kNoLabel ? kNoLabel : BaseLabel(g.label(v)));
  }
  for (VertexIndex v = 0; v < n; ++v) {
    for (PortId p = 0; p < static_cast<PortId>(g.port_count()); ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used() || std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      out.connect(v, BasePort(p), s.vertex, BasePort(s.port), s.label);
    }
  }
  return out;
}

std::vector<Component> Project(const CanonicalGraph& x,
                               const std::vector<VertexIndex>& keep,
                               bool drop) {
  std::vector<VertexIndex> map;
  const PortGraph sub = x.graph().Induced(keep, &map);
  const AlphabetPtr& base = BaseAlphabet(x);
  std::vector<Component> out;
  for (const auto& comp : sub.Components()) {
    Component c;
    for (VertexIndex i : comp) c.vertices.push_back(keep[i]);
    std::sort(c.vertices.begin(), c.vertices.end());
    c.anchor = x.name(c.vertices.front());
    const VertexIndex local = map[c.vertices.front()];
    c.graph = drop ? std::move(Canonicalize(base, DropPortGraph(sub, base->port_count()),
                                            local).graph)
                   : std::move(Canonicalize(x.alphabet(), sub, local).graph);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<Component> LowerProjection(const CanonicalGraph& x) {
  std::vector<VertexIndex> keep;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
    if (!IsMarked(x, v)) keep.push_back(v);
  }
  return Project(x, keep, true);
}

std::vector<Component> UpperProjection(const CanonicalGraph& x) {
  std::vector<VertexIndex> keep;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
    if (IsMarked(x, v) || HasMarkedPort(x, v)) keep.push_back(v);
  }
  return Project(x, keep, false);
}

// ---------------------------------------------------------------------------
// Reversible extension.

namespace {

Step LiftedStep(const Dynamics& f, const CanonicalGraph& x) {
  const AlphabetPtr& base = BaseAlphabet(x);
  const Canonicalized dropped =
      Canonicalize(base, DropPortGraph(x.graph(), base->port_count()), 0);
  const Step st = f.Apply(dropped.graph);
  // Lifting keeps canonical indices: port (p, 0) orders like p.
  return Step{Lift(st.image),
              Compose(dropped.index_map, st.correspondence)};
}

Step Extend(const Dynamics& f, int p, const CanonicalGraph& x) {
  const auto n = static_cast<VertexIndex>(x.vertex_count());
  const std::size_t marked = CountMarked(x);
  if (marked == 0) return LiftedStep(f, x);
  if (marked == x.vertex_count() || x.vertex_count() <= static_cast<std::size_t>(p)) {
    return Step{x, IdentityCorrespondence(x.vertex_count())};
  }
  const AlphabetPtr& base = BaseAlphabet(x);
  const Alphabet& al = *x.alphabet();

  // Frozen part: marked vertices and unmarked vertices next to one.
  Patch glued(x.alphabet());
  {
    std::vector<std::size_t> idx(n, 0);
    std::vector<bool> upper(n, false);
    for (VertexIndex v = 0; v < n; ++v) {
      if (IsMarked(x, v) || HasMarkedPort(x, v)) {
        upper[v] = true;
        idx[v] = glued.add_vertex({Token{x.name(v), 0}}, x.label(v));
      }
    }
    for (VertexIndex v = 0; v < n; ++v) {
      if (!upper[v]) continue;
      for (PortId q = 0; q < static_cast<PortId>(x.port_count()); ++q) {
        const Slot& s = x.slot(v, q);
        if (!s.used() || !upper[s.vertex] ||
            std::make_pair(s.vertex, s.port) < std::make_pair(v, q)) {
          continue;
        }
        glued.add_edge(idx[v], q, idx[s.vertex], s.port, s.label);
      }
    }
  }

  // Each lower component, transformed by F and renamed into X.
  std::vector<VertexIndex> lower;
  for (VertexIndex v = 0; v < n; ++v) {
    if (!IsMarked(x, v)) lower.push_back(v);
  }
  std::vector<VertexIndex> map;
  const PortGraph sub = x.graph().Induced(lower, &map);
  const PortGraph sub_base = DropPortGraph(sub, base->port_count());
  for (const auto& comp : sub.Components()) {
    // comp holds indices into `lower`, which is ascending, so comp[0] is
    // the component's least vertex of X.
    const VertexIndex anchor = lower[comp.front()];
    const Canonicalized c = Canonicalize(base, sub_base, comp.front());
    const Step st = f.Apply(c.graph);
    const CanonicalGraph& img = st.image;
    std::vector<std::vector<Token>> tokens(img.vertex_count());
    for (VertexIndex i : comp) {
      tokens[st.correspondence[c.index_map[i]]].push_back(
          Token{x.name(lower[i]), 0});
    }
    Patch piece(x.alphabet());
    std::uint32_t fresh = 0;
    for (VertexIndex w = 0; w < static_cast<VertexIndex>(img.vertex_count());
         ++w) {
      if (tokens[w].empty()) tokens[w].push_back(Token{x.name(anchor), ++fresh});
      piece.add_vertex(MakeTokenSet(std::move(tokens[w])),
                       MarkedLabel(img.label(w), 0));
    }
    for (VertexIndex w = 0; w < static_cast<VertexIndex>(img.vertex_count());
         ++w) {
      for (PortId q = 0; q < static_cast<PortId>(img.port_count()); ++q) {
        const Slot& s = img.slot(w, q);
        if (!s.used() ||
            std::make_pair(s.vertex, s.port) < std::make_pair(w, q)) {
          continue;
        }
        piece.add_edge(w, MarkedPort(q, 0), s.vertex, MarkedPort(s.port, 0),
                       s.label);
      }
    }
    if (CheckResult r = Consistent(glued, piece); !r) {
      throw Error("reversible extension of " + f.name() +
                  ": the image of the component at " +
                  FormatPath(al, x.name(anchor)) +
                  " conflicts with the frozen part: " + r.detail());
    }
    glued = Union(glued, piece);
  }

  PortGraph g(x.port_count());
  for (const PatchVertex& v : glued.vertices()) g.add_vertex(v.label);
  for (const PatchEdge& e : glued.edges()) {
    g.connect(static_cast<VertexIndex>(e.first), e.first_port,
              static_cast<VertexIndex>(e.second), e.second_port, e.label);
  }
  const auto origin =
      static_cast<VertexIndex>(*glued.vertex_with_token(Token{Path(), 0}));
  Canonicalized c = Canonicalize(x.alphabet(), g, origin);
  if (c.graph.vertex_count() != g.vertex_count()) {
    throw Error("reversible extension of " + f.name() +
                ": the glued image is disconnected");
  }
  Correspondence r(n);
  for (VertexIndex v = 0; v < n; ++v) {
    r[v] = c.index_map[*glued.vertex_with_token(Token{x.name(v), 0})];
  }
  return Step{std::move(c.graph), std::move(r)};
}

}  // namespace

Dynamics ReversibleExtension(const Dynamics& f, int exception_bound,
                             const AlphabetPtr& base) {
  if (exception_bound < 0) throw Error("exception bound must be >= 0");
  return Dynamics(f.name() + "'", Alphabet::Marked(base),
                  [f, exception_bound](const CanonicalGraph& x) {
                    return Extend(f, exception_bound, x);
                  });
}

GraphFamily MarkedClosure(const Dynamics& extension,
                          const std::vector<CanonicalGraph>& seeds,
                          std::size_t cap) {
  if (seeds.empty()) throw Error("closure needs at least one seed");
  if (cap == 0) cap = DefaultEnumerationCap();
  std::unordered_set<CanonicalGraph, CanonicalGraphHash> seen;
  std::deque<CanonicalGraph> todo;
  std::vector<CanonicalGraph> members;
  auto offer = [&](const CanonicalGraph& g) {
    if (!seen.insert(g).second) return;
    if (seen.size() > cap) {
      throw ResourceLimit("marked closure exceeded the cap of " +
                          std::to_string(cap) + " graphs");
    }
    members.push_back(g);
    todo.push_back(g);
  };
  for (const CanonicalGraph& s : seeds) offer(s);
  while (!todo.empty()) {
    const CanonicalGraph g = std::move(todo.front());
    todo.pop_front();
    offer(extension.Apply(g).image);
    offer(Mark(g).image);
    for (VertexIndex v = 1; v < static_cast<VertexIndex>(g.vertex_count()); ++v) {
      offer(ShiftTo(g, v).graph);
    }
  }
  return GraphFamily(seeds.front().alphabet(), std::move(members));
}

namespace {

Dynamics Conjugate(const Dynamics& ext, const Dynamics& inv,
                   const Dynamics& mark) {
  return ComposeDynamics("K", {ext, mark, inv});
}

}  // namespace

BlockSystem MakeBlockSystem(const Dynamics& f, int exception_bound,
                            const GraphFamily& base_family, std::size_t cap) {
  const AlphabetPtr base = base_family.alphabet();
  const Dynamics ext = ReversibleExtension(f, exception_bound, base);
  std::vector<CanonicalGraph> seeds;
  for (const CanonicalGraph& x : base_family) seeds.push_back(Lift(x));
  GraphFamily closure = MarkedClosure(ext, seeds, cap);
  const Dynamics inv = BuildInverse(ext, closure).AsDynamics(ext.name() + "^-1");
  const Dynamics mark = MarkDynamics(base);
  return BlockSystem{f, ext, inv, mark, Conjugate(ext, inv, mark),
                     std::move(closure)};
}

BlockSystem MakeBlockSystemFromInverse(const Dynamics& f,
                                       const Dynamics& f_inverse,
                                       int exception_bound,
                                       const AlphabetPtr& base) {
  const Dynamics ext = ReversibleExtension(f, exception_bound, base);
  const Dynamics inv = ReversibleExtension(f_inverse, exception_bound, base);
  const Dynamics mark = MarkDynamics(base);
  return BlockSystem{f, ext, inv, mark, Conjugate(ext, inv, mark),
                     std::nullopt};
}

int DefaultExceptionBound(const std::string& name) {
  if (name == "identity" || name == "moving-head" ||
      name == "moving-head-inverse") {
    return 0;
  }
  if (name == "turtle") return 2;
  throw Error("no default exception bound for " + name);
}

// ---------------------------------------------------------------------------
// Decomposition.

DecompositionTrace BlockDecompose(const BlockSystem& s,
                                  const CanonicalGraph& x) {
  DecompositionTrace t;
  const CanonicalGraph lifted = Lift(x);
  const std::vector<Path> anchors = AllAnchors(lifted);
  t.panels.push_back(lifted);
  t.captions.push_back("lift");

  std::vector<CanonicalGraph> panels;
  const Step k = Product(s.conjugate, lifted, anchors, &panels);
  for (std::size_t i = 0; i < panels.size(); ++i) {
    t.panels.push_back(panels[i]);
    t.captions.push_back("K at " +
                         FormatPath(*lifted.alphabet(), anchors[i]));
  }
  t.conjugate_blocks = panels.size();

  // The mark blocks are anchored at the same vertices of X, carried
  // through the correspondence of the K phase.
  Step acc = k;
  for (const Path& a : anchors) {
    const VertexIndex v = *Resolve(lifted, a);
    const Step st = ShiftedApplyAt(s.mark, acc.image, acc.correspondence[v]);
    acc.correspondence = Compose(acc.correspondence, st.correspondence);
    acc.image = st.image;
    t.panels.push_back(acc.image);
    t.captions.push_back("mu at " + FormatPath(*lifted.alphabet(), a));
    ++t.mark_blocks;
  }
  t.result = DropMarks(acc.image);
  t.correspondence = acc.correspondence;
  t.panels.push_back(t.result);
  t.captions.push_back("drop marks");
  return t;
}

CanonicalGraph BlockDecomposeStep(const BlockSystem& s,
                                  const CanonicalGraph& x) {
  return BlockDecompose(s, x).result;
}

CheckResult CheckTraceShape(const DecompositionTrace& t) {
  const std::size_t k_end = 1 + t.conjugate_blocks;
  if (t.panels.size() != k_end + t.mark_blocks + 1) {
    return CheckResult::Fail("unexpected number of panels");
  }
  for (std::size_t i = 1; i < k_end; ++i) {
    if (CountMarked(t.panels[i]) < CountMarked(t.panels[i - 1])) {
      return CheckResult::Fail("mark count decreases at panel " +
                               std::to_string(i) + " (" + t.captions[i] + ")");
    }
  }
  for (std::size_t i = 0; i + 1 < t.panels.size(); ++i) {
    if (CheckResult r = CheckMarkConsistency(t.panels[i]); !r) {
      return CheckResult::Fail("panel " + std::to_string(i) + " (" +
                               t.captions[i] + "): " + r.detail());
    }
  }
  if (CountMarked(t.panels[t.panels.size() - 2]) != 0) {
    return CheckResult::Fail("marks remain after the mu phase");
  }
  return CheckResult::Pass();
}

// ---------------------------------------------------------------------------
// Locality.

std::vector<VertexIndex> AlteredVertices(const CanonicalGraph& before,
                                         const Step& step) {
  const CanonicalGraph& after = step.image;
  const Correspondence& t = step.correspondence;
  if (after.vertex_count() != before.vertex_count()) {
    throw Error("altered vertices need a vertex-preserving step");
  }
  std::vector<VertexIndex> out;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(before.vertex_count());
       ++v) {
    const VertexIndex w = t[v];
    bool altered = before.label(v) != after.label(w);
    for (PortId p = 0; !altered && p < static_cast<PortId>(before.port_count());
         ++p) {
      const Slot& a = before.slot(v, p);
      const Slot& b = after.slot(w, p);
      altered = a.used() != b.used() ||
                (a.used() && (a.port != b.port || a.label != b.label ||
                              t[a.vertex] != b.vertex));
    }
    if (altered) out.push_back(v);
  }
  return out;
}

LocalityReport CheckLocality(const Dynamics& l, int radius,
                             const GraphFamily& fam) {
  LocalityReport rep;
  rep.inflation.assign(radius + 2, 0);
  for (std::size_t m = 0; m < fam.size(); ++m) {
    const CanonicalGraph& x = fam[m];
    const Step st = l.Apply(x);
    const CanonicalGraph& y = st.image;
    std::vector<std::vector<VertexIndex>> pre(y.vertex_count());
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
      pre[st.correspondence[v]].push_back(v);
      const int s = x.distance(v);
      const int img = y.distance(st.correspondence[v]);
      for (int k = s; k <= radius + 1; ++k) {
        rep.inflation[k] = std::max(rep.inflation[k], img);
      }
    }
    for (VertexIndex w = 0; w < static_cast<VertexIndex>(y.vertex_count()); ++w) {
      auto matches = [&](int r) {
        const DiskGraph dy = DiskAround(y, w, r);
        for (VertexIndex v : pre[w]) {
          if (DiskAround(x, v, r) == dy) return true;
        }
        return false;
      };
      const std::string where =
          "member " + std::to_string(m) + ", image vertex " +
          FormatPath(*y.alphabet(), y.name(w));
      if (rep.local && y.distance(w) > radius && !matches(0)) {
        rep.local = CheckResult::Fail(where + ": no preimage with the same "
                                              "radius-0 disk");
      }
      if (rep.to_the_t && y.distance(w) > radius + 1 && !matches(1)) {
        rep.to_the_t = CheckResult::Fail(where + ": no preimage with the same "
                                                 "radius-1 disk");
      }
    }
    if (!rep.local) break;
  }
  return rep;
}

std::optional<int> FindLocalityRadius(const Dynamics& l, const GraphFamily& fam,
                                      int max_radius) {
  for (int r = 0; r <= max_radius; ++r) {
    if (CheckLocality(l, r, fam).local) return r;
  }
  return std::nullopt;
}

FootprintReport CheckBlockFootprint(const BlockSystem& s,
                                    const CanonicalGraph& x, int radius) {
  FootprintReport rep;
  rep.depth_bound = 1;
  const std::size_t ports = 2 * x.port_count();
  for (int i = 0; i < radius; ++i) rep.depth_bound *= ports;

  const CanonicalGraph lifted = Lift(x);
  const auto n = static_cast<VertexIndex>(lifted.vertex_count());
  Step acc{lifted, IdentityCorrespondence(n)};
  std::vector<std::size_t> depth(n, 0);
  for (VertexIndex a = 0; a < n; ++a) {
    const VertexIndex u = acc.correspondence[a];
    const Step st = ShiftedApplyAt(s.conjugate, acc.image, u);
    const std::vector<int> dist = acc.image.graph().Distances(u);
    for (VertexIndex v : AlteredVertices(acc.image, st)) {
      rep.max_reach = std::max(rep.max_reach, dist[v]);
      if (rep.contained && dist[v] > radius) {
        rep.contained = CheckResult::Fail(
            "K at " + FormatPath(*lifted.alphabet(), lifted.name(a)) +
            " alters a vertex at distance " + std::to_string(dist[v]));
      }
    }
    // Back to vertices of X: the K phase is vertex-preserving here.
    std::vector<VertexIndex> inv(n, kNoVertex);
    for (VertexIndex v = 0; v < n; ++v) inv[acc.correspondence[v]] = v;
    for (VertexIndex v = 0; v < n; ++v) {
      if (dist[v] >= 0 && dist[v] <= radius) ++depth[inv[v]];
    }
    acc.correspondence = Compose(acc.correspondence, st.correspondence);
    acc.image = st.image;
  }
  for (std::size_t d : depth) rep.max_depth = std::max(rep.max_depth, d);
  if (rep.contained && rep.max_depth > rep.depth_bound) {
    rep.contained = CheckResult::Fail("depth " + std::to_string(rep.max_depth) +
                                      " exceeds |pi'|^r' = " +
                                      std::to_string(rep.depth_bound));
  }
  return rep;
}

}  // namespace cgd
