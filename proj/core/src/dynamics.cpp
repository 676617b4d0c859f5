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

#include "cgd/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "cgd/text_format.hpp"

namespace cgd {

Correspondence IdentityCorrespondence(std::size_t n) {
  Correspondence c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<VertexIndex>(i);
  return c;
}

Correspondence Compose(const Correspondence& first,
                       const Correspondence& second) {
  Correspondence out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i) out[i] = second[first[i]];
  return out;
}

Dynamics::Dynamics(std::string name, AlphabetPtr alphabet, Function fn)
    : name_(std::move(name)),
      alphabet_(std::move(alphabet)),
      fn_(std::make_shared<const Function>(std::move(fn))) {}

Dynamics Dynamics::WithBound(int b) const {
  Dynamics d = *this;
  d.bound_ = b;
  return d;
}

Dynamics Dynamics::WithRadius(int r) const {
  Dynamics d = *this;
  d.radius_ = r;
  return d;
}

Step Dynamics::Apply(const CanonicalGraph& x) const {
  if (alphabet_ != nullptr && !SameAlphabet(alphabet_, x.alphabet())) {
    throw Error("dynamics " + name_ + ": graph uses a different alphabet");
  }
  Step s = (*fn_)(x);
  if (s.correspondence.size() != x.vertex_count()) {
    throw Error("dynamics " + name_ + ": correspondence has wrong size");
  }
  for (VertexIndex v : s.correspondence) {
    if (v < 0 || static_cast<std::size_t>(v) >= s.image.vertex_count()) {
      throw Error("dynamics " + name_ + ": correspondence out of range");
    }
  }
  if (!s.correspondence.empty() && s.correspondence[0] != 0) {
    throw Error("dynamics " + name_ + ": origin must map to origin");
  }
  return s;
}

// ---------------------------------------------------------------------------

namespace {

constexpr PortId kA = 0, kB = 1, kC = 2, kD = 3;

Step Rebuild(const CanonicalGraph& x, const PortGraph& g) {
  Canonicalized c = Canonicalize(x.alphabet(), g, 0);
  return Step{std::move(c.graph), std::move(c.index_map)};
}

// The tape neighbour of t across `port`, if {t:port, n:opposite(port)} is
// an a-b edge to another vertex.
std::optional<VertexIndex> TapeNeighbour(const PortGraph& g, VertexIndex t,
                                         PortId port) {
  const Slot& s = g.slot(t, port);
  const PortId want = port == kA ? kB : kA;
  if (!s.used() || s.port != want || s.vertex == t) return std::nullopt;
  return s.vertex;
}

bool HasTapeEdge(const PortGraph& g, VertexIndex t) {
  return TapeNeighbour(g, t, kA).has_value() ||
         TapeNeighbour(g, t, kB).has_value();
}

Step MoveHeads(const CanonicalGraph& x, bool backwards) {
  const PortGraph& in = x.graph();
  struct Intent {
    VertexIndex head;
    PortId from_port;  // c or d, at both ends
    VertexIndex target;
    PortId target_port;
  };
  std::vector<Intent> intents;
  for (VertexIndex h = 0; h < static_cast<VertexIndex>(in.vertex_count());
       ++h) {
    if (in.degree(h) != 1) continue;
    PortId p = -1;
    for (PortId q : {kC, kD}) {
      if (in.slot(h, q).used()) p = q;
    }
    if (p < 0) continue;
    const Slot& s = in.slot(h, p);
    if (s.port != p || s.vertex == h || !HasTapeEdge(in, s.vertex)) continue;
    const VertexIndex t = s.vertex;
    const PortId other = p == kC ? kD : kC;
    // cc-heads travel across port a (forwards) and dd-heads across port b;
    // the inverse swaps the two.
    const PortId along = (p == kC) != backwards ? kA : kB;
    Intent intent{h, p, t, other};
    if (auto next = TapeNeighbour(in, t, along)) {
      intent.target = *next;
      intent.target_port = p;
      if (in.slot(*next, p).used()) {
        intent.target = t;
        intent.target_port = other;
      }
    }
    if (in.slot(intent.target, intent.target_port).used()) continue;
    intents.push_back(intent);
  }
  std::map<std::pair<VertexIndex, PortId>, int> aimed;
  for (const Intent& i : intents) ++aimed[{i.target, i.target_port}];

  PortGraph out = in;
  std::vector<const Intent*> moving;
  for (const Intent& i : intents) {
    if (aimed[{i.target, i.target_port}] == 1) moving.push_back(&i);
  }
  for (const Intent* i : moving) {
    const LabelId label = in.slot(i->head, i->from_port).label;
    out.disconnect(i->head, i->from_port);
    (void)label;
  }
  for (const Intent* i : moving) {
    const LabelId label = in.slot(i->head, i->from_port).label;
    out.connect(i->head, i->target_port, i->target, i->target_port, label);
  }
  return Rebuild(x, out);
}

enum Child { kNW = 0, kNE = 1, kSW = 2, kSE = 3 };

// The two children on a given side of an inflated vertex, in the order in
// which they pair up with the children on the far side.
std::pair<Child, Child> Side(PortId port) {
  switch (port) {
    case kA: return {kNW, kNE};
    case kB: return {kNE, kSE};
    case kC: return {kSW, kSE};
    default: return {kNW, kSW};
  }
}

Step Inflate(const CanonicalGraph& x) {
  const PortGraph& in = x.graph();
  const auto n = static_cast<VertexIndex>(in.vertex_count());
  PortGraph out(4);
  for (VertexIndex v = 0; v < n; ++v) {
    for (int k = 0; k < 4; ++k) out.add_vertex(in.label(v));
  }
  auto child = [](VertexIndex v, Child c) { return 4 * v + c; };
  for (VertexIndex v = 0; v < n; ++v) {
    out.connect(child(v, kNW), kB, child(v, kNE), kD);
    out.connect(child(v, kSW), kB, child(v, kSE), kD);
    out.connect(child(v, kNW), kC, child(v, kSW), kA);
    out.connect(child(v, kNE), kC, child(v, kSE), kA);
    for (PortId i = 0; i < 4; ++i) {
      const Slot& s = in.slot(v, i);
      if (!s.used() ||
          std::make_pair(s.vertex, s.port) < std::make_pair(v, i)) {
        continue;
      }
      const auto [v0, v1] = Side(i);
      const auto [w0, w1] = Side(s.port);
      out.connect(child(v, v0), i, child(s.vertex, w0), s.port, s.label);
      out.connect(child(v, v1), i, child(s.vertex, w1), s.port, s.label);
    }
  }
  Canonicalized c = Canonicalize(x.alphabet(), out, 0);
  Correspondence r(n);
  for (VertexIndex v = 0; v < n; ++v) r[v] = c.index_map[child(v, kNW)];
  return Step{std::move(c.graph), std::move(r)};
}

}  // namespace

AlphabetPtr MovingHeadAlphabet() {
  static const AlphabetPtr a = Alphabet::Make({"a", "b", "c", "d"}, {"x"}, {});
  return a;
}

AlphabetPtr GridAlphabet() {
  static const AlphabetPtr a =
      Alphabet::Make({"a", "b", "c", "d"}, {"black", "white"}, {});
  return a;
}

AlphabetPtr TurtleAlphabet() {
  static const AlphabetPtr a = Alphabet::Make({"a", "b"}, {"x"}, {});
  return a;
}

Dynamics IdentityDynamics() {
  return Dynamics("identity", nullptr,
                  [](const CanonicalGraph& x) {
                    return Step{x, IdentityCorrespondence(x.vertex_count())};
                  })
      .WithBound(0)
      .WithRadius(0);
}

Dynamics MovingHead() {
  return Dynamics("moving-head", MovingHeadAlphabet(),
                  [](const CanonicalGraph& x) { return MoveHeads(x, false); })
      .WithBound(0)
      .WithRadius(1);
}

Dynamics MovingHeadInverse() {
  return Dynamics("moving-head-inverse", MovingHeadAlphabet(),
                  [](const CanonicalGraph& x) { return MoveHeads(x, true); })
      .WithBound(0)
      .WithRadius(1);
}

Dynamics InflatingGrid() {
  return Dynamics("inflating-grid", GridAlphabet(), Inflate)
      .WithBound(1)
      .WithRadius(0);
}

CanonicalGraph TurtleGraphA() {
  PortGraph g(2);
  g.add_vertex(0);
  g.connect(0, kA, 0, kB);
  return std::move(Canonicalize(TurtleAlphabet(), g, 0).graph);
}

CanonicalGraph TurtleGraphB() {
  PortGraph g(2);
  g.add_vertex(0);
  g.add_vertex(0);
  g.connect(0, kA, 1, kB);
  g.connect(0, kB, 1, kA);
  return std::move(Canonicalize(TurtleAlphabet(), g, 0).graph);
}

Dynamics Turtle() {
  return Dynamics("turtle", TurtleAlphabet(),
                  [](const CanonicalGraph& x) {
                    static const CanonicalGraph a = TurtleGraphA();
                    static const CanonicalGraph b = TurtleGraphB();
                    if (x == a) return Step{b, Correspondence{0}};
                    if (x == b) return Step{a, Correspondence{0, 0}};
                    return Step{x, IdentityCorrespondence(x.vertex_count())};
                  })
      .WithBound(1)
      .WithRadius(2);
}

std::vector<std::string> DynamicsNames() {
  return {"identity", "moving-head", "moving-head-inverse", "inflating-grid",
          "turtle"};
}

Dynamics DynamicsByName(const std::string& name) {
  if (name == "identity") return IdentityDynamics();
  if (name == "moving-head") return MovingHead();
  if (name == "moving-head-inverse") return MovingHeadInverse();
  if (name == "inflating-grid") return InflatingGrid();
  if (name == "turtle") return Turtle();
  throw Error("unknown dynamics '" + name + "'");
}

// ---------------------------------------------------------------------------

CheckResult CheckShiftInvariance(const Dynamics& d, const CanonicalGraph& x) {
  const Alphabet& alpha = *x.alphabet();
  const Step fx = d.Apply(x);
  for (VertexIndex u = 0; u < static_cast<VertexIndex>(x.vertex_count());
       ++u) {
    const Canonicalized xu = ShiftTo(x, u);
    const Step fxu = d.Apply(xu.graph);
    const Canonicalized expected = ShiftTo(fx.image, fx.correspondence[u]);
    const std::string at = "u=" + FormatPath(alpha, x.name(u));
    if (!(fxu.image == expected.graph)) {
      return CheckResult::Fail(at + ": F(X_u) differs from F(X)_{R_X(u)}");
    }
    for (VertexIndex w = 0; w < static_cast<VertexIndex>(x.vertex_count());
         ++w) {
      // w is u.v where v = xu.index_map[w] in X_u.
      const VertexIndex v = xu.index_map[w];
      const auto rhs =
          Walk(fx.image, fx.correspondence[u],
               fxu.image.name(fxu.correspondence[v]));
      if (!rhs || *rhs != fx.correspondence[w]) {
        return CheckResult::Fail(
            at + ", v=" + FormatPath(alpha, xu.graph.name(v)) +
            ": R_X(u.v) != R_X(u).R_{X_u}(v)");
      }
    }
  }
  return CheckResult::Pass();
}

CheckResult CheckBoundedness(const Dynamics& d, const CanonicalGraph& x,
                             int bound) {
  if (bound < 0) throw Error("negative bound");
  const Step fx = d.Apply(x);
  std::vector<VertexIndex> sources(fx.correspondence.begin(),
                                   fx.correspondence.end());
  const std::vector<int> dist = fx.image.graph().Distances(sources);
  for (VertexIndex w = 0; w < static_cast<VertexIndex>(dist.size()); ++w) {
    if (dist[w] < 0 || dist[w] > bound + 1) {
      return CheckResult::Fail(
          "image vertex " + FormatPath(*fx.image.alphabet(), fx.image.name(w)) +
          " is not within the radius-" + std::to_string(bound) +
          " disk of any vertex of im R_X");
    }
  }
  return CheckResult::Pass();
}

namespace {

// {(name in X, name in F(X))} for the vertices whose image lies in the
// radius-m disk of F(X).
std::set<std::pair<Path, Path>> RestrictedCorrespondence(
    const CanonicalGraph& x, const Step& fx, int m, int n, bool* in_domain) {
  std::set<std::pair<Path, Path>> out;
  *in_domain = true;
  for (VertexIndex u = 0; u < static_cast<VertexIndex>(x.vertex_count());
       ++u) {
    const VertexIndex w = fx.correspondence[u];
    if (fx.image.distance(w) > m + 1) continue;
    if (x.distance(u) > n + 1) *in_domain = false;
    out.emplace(x.name(u), fx.image.name(w));
  }
  return out;
}

}  // namespace

CheckResult ContinuityProbe(const Dynamics& d, const CanonicalGraph& x,
                            const CanonicalGraph& y, int m, int n) {
  if (!(Disk(x, n) == Disk(y, n))) return CheckResult::Pass();
  const Step fx = d.Apply(x);
  const Step fy = d.Apply(y);
  if (!(Disk(fx.image, m) == Disk(fy.image, m))) {
    return CheckResult::Fail("X^" + std::to_string(n) + " = Y^" +
                             std::to_string(n) + " but F(X)^" +
                             std::to_string(m) + " != F(Y)^" +
                             std::to_string(m));
  }
  bool x_dom = true, y_dom = true;
  const auto rx = RestrictedCorrespondence(x, fx, m, n, &x_dom);
  const auto ry = RestrictedCorrespondence(y, fy, m, n, &y_dom);
  if (!x_dom || !y_dom) {
    return CheckResult::Fail("restricted correspondence reaches outside the "
                             "radius-" + std::to_string(n) + " disk");
  }
  if (rx != ry) {
    return CheckResult::Fail("restricted correspondences R_X^" +
                             std::to_string(m) + " and R_Y^" +
                             std::to_string(m) + " differ");
  }
  return CheckResult::Pass();
}

}  // namespace cgd
