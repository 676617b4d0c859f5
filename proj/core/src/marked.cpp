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

#include "cgd/marked.hpp"

#include <utility>

namespace cgd {

const AlphabetPtr& BaseAlphabet(const CanonicalGraph& x) {
  if (!x.alphabet()->is_marked()) throw Error("graph is not a marked graph");
  return x.alphabet()->base();
}

CanonicalGraph Lift(const CanonicalGraph& x) {
  const AlphabetPtr marked = Alphabet::Marked(x.alphabet());
  const auto n = static_cast<VertexIndex>(x.vertex_count());
  const auto ports = static_cast<PortId>(x.port_count());
  PortGraph g(2 * x.port_count());
  for (VertexIndex v = 0; v < n; ++v) g.add_vertex(MarkedLabel(x.label(v), 0));
  for (VertexIndex v = 0; v < n; ++v) {
    for (PortId p = 0; p < ports; ++p) {
      const Slot& s = x.slot(v, p);
      if (!s.used() || std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      g.connect(v, MarkedPort(p, 0), s.vertex, MarkedPort(s.port, 0), s.label);
    }
  }
  return std::move(Canonicalize(marked, g, 0).graph);
}

CanonicalGraph DropMarks(const CanonicalGraph& x) {
  const AlphabetPtr& base = BaseAlphabet(x);
  const auto n = static_cast<VertexIndex>(x.vertex_count());
  const auto ports = static_cast<PortId>(x.port_count());
  PortGraph g(base->port_count());
  for (VertexIndex v = 0; v < n; ++v) {
    g.add_vertex(x.label(v) == kNoLabel ? kNoLabel : BaseLabel(x.label(v)));
  }
  for (VertexIndex v = 0; v < n; ++v) {
    for (PortId p = 0; p < ports; ++p) {
      const Slot& s = x.slot(v, p);
      if (!s.used() || std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      try {
        g.connect(v, BasePort(p), s.vertex, BasePort(s.port), s.label);
      } catch (const Error&) {
        throw Error("cannot drop marks: vertex " +
                    FormatPath(*x.alphabet(), x.name(v)) +
                    " uses both marked copies of a port");
      }
    }
  }
  // The origin is unchanged and the graph stays connected, but names may
  // shrink, so the result is re-canonicalized.
  return std::move(Canonicalize(base, g, 0).graph);
}

bool IsMarked(const CanonicalGraph& x, VertexIndex v) {
  const LabelId l = x.label(v);
  return l != kNoLabel && LabelBit(l) == 1;
}

std::size_t CountMarked(const CanonicalGraph& x) {
  std::size_t n = 0;
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
    n += IsMarked(x, v);
  }
  return n;
}

bool AllMarked(const CanonicalGraph& x) {
  return CountMarked(x) == x.vertex_count();
}

bool AllUnmarked(const CanonicalGraph& x) { return CountMarked(x) == 0; }

CheckResult CheckMarkConsistency(const CanonicalGraph& x) {
  BaseAlphabet(x);
  const Alphabet& al = *x.alphabet();
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
    if (x.label(v) == kNoLabel) {
      return CheckResult::Fail("vertex " + FormatPath(al, x.name(v)) +
                               " carries no mark");
    }
    const int mark = LabelBit(x.label(v));
    for (PortId p = 0; p < static_cast<PortId>(x.port_count()); ++p) {
      const Slot& s = x.slot(v, p);
      if (s.used() && PortBit(s.port) != mark) {
        return CheckResult::Fail(
            "edge " + FormatPath(al, x.name(v)) + ":" + al.port_name(p) + " - " +
            FormatPath(al, x.name(s.vertex)) + ":" + al.port_name(s.port) +
            ": far port bit differs from the mark of " +
            FormatPath(al, x.name(v)));
      }
    }
  }
  return CheckResult::Pass();
}

Step Mark(const CanonicalGraph& x) {
  BaseAlphabet(x);
  const auto ports = static_cast<PortId>(x.port_count());
  const Step unchanged{x, IdentityCorrespondence(x.vertex_count())};
  for (PortId i = 0; i < ports; ++i) {
    const Slot& s = x.slot(0, i);
    if (s.used() && x.slot(s.vertex, TogglePort(s.port)).used()) {
      return unchanged;
    }
  }
  PortGraph g = x.graph();
  if (g.label(0) != kNoLabel) g.set_label(0, ToggleLabel(g.label(0)));
  struct Edge {
    PortId i;
    VertexIndex v;
    PortId j;
    LabelId label;
  };
  std::vector<Edge> edges;
  for (PortId i = 0; i < ports; ++i) {
    const Slot& s = x.slot(0, i);
    if (!s.used() || (s.vertex == 0 && s.port < i)) continue;
    edges.push_back({i, s.vertex, s.port, s.label});
    g.disconnect(0, i);
  }
  for (const Edge& e : edges) {
    if (e.v == 0) {
      g.connect(0, TogglePort(e.i), 0, TogglePort(e.j), e.label);
    } else {
      g.connect(0, e.i, e.v, TogglePort(e.j), e.label);
    }
  }
  Canonicalized c = Canonicalize(x.alphabet(), g, 0);
  return Step{std::move(c.graph), std::move(c.index_map)};
}

Dynamics MarkDynamics(const AlphabetPtr& base) {
  return Dynamics("mark", Alphabet::Marked(base), Mark).WithBound(0).WithRadius(1);
}

}  // namespace cgd
