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

#ifndef CGD_DYNAMICS_HPP_
#define CGD_DYNAMICS_HPP_

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cgd/canonical.hpp"
#include "cgd/error.hpp"
#include "cgd/modulo.hpp"

namespace cgd {

// correspondence[v] is the image vertex that input vertex v became.
using Correspondence = std::vector<VertexIndex>;

struct Step {
  CanonicalGraph image;
  Correspondence correspondence;
};

Correspondence IdentityCorrespondence(std::size_t n);
// (second after first)[v] = second[first[v]].
Correspondence Compose(const Correspondence& first,
                       const Correspondence& second);

// A global transformation F together with its vertex correspondence R.
// Values are immutable and cheap to copy.
class Dynamics {
 public:
  using Function = std::function<Step(const CanonicalGraph&)>;

  // A null alphabet accepts graphs over any alphabet.
  Dynamics(std::string name, AlphabetPtr alphabet, Function fn);

  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  std::optional<int> declared_bound() const { return bound_; }
  std::optional<int> declared_radius() const { return radius_; }
  Dynamics WithBound(int b) const;
  Dynamics WithRadius(int r) const;

  // Throws Error on alphabet mismatch, or if the function breaks the
  // correspondence contract (wrong size, out of range, origin not fixed).
  Step Apply(const CanonicalGraph& x) const;

 private:
  std::string name_;
  AlphabetPtr alphabet_;
  std::shared_ptr<const Function> fn_;
  std::optional<int> bound_;
  std::optional<int> radius_;
};

inline Step ApplyDynamics(const Dynamics& d, const CanonicalGraph& x) {
  return d.Apply(x);
}

// ---------------------------------------------------------------------------
// Built-in dynamics.

// ports a b c d, one vertex label "x", no edge labels.
AlphabetPtr MovingHeadAlphabet();
// ports a b c d (a up, b right, c down, d left), labels black/white.
AlphabetPtr GridAlphabet();
// ports a b, one vertex label "x", no edge labels.
AlphabetPtr TurtleAlphabet();

Dynamics IdentityDynamics();

// A head is a degree-1 vertex h whose edge is {h:c, t:c} or {h:d, t:d} with
// t a vertex carrying at least one a-b tape edge. A cc-head moves to the
// tape neighbour across t's port a, or turns into a dd-head at the end of
// the tape; a dd-head moves across t's port b, or turns into a cc-head at
// the start. A move into an occupied port turns instead; a turn into an
// occupied port, or two heads aiming at the same port, leaves the heads
// where they are. Every vertex persists.
Dynamics MovingHead();
// The same rule run backwards: cc-heads step across port b, dd-heads
// across port a.
Dynamics MovingHeadInverse();

// Every vertex splits into a 2x2 block NW NE / SW SE labelled like the
// parent; an edge {v:i, w:j} becomes two edges between the children on
// side i of v and side j of w. R(v) = NW(v).
Dynamics InflatingGrid();

// Swaps graph A (one vertex with a self-loop a-b) and graph B (two vertices
// joined by a-b and b-a); identity elsewhere.
Dynamics Turtle();
CanonicalGraph TurtleGraphA();
CanonicalGraph TurtleGraphB();

// Name -> dynamics for the command line: identity, moving-head,
// moving-head-inverse, inflating-grid, turtle. Throws Error otherwise.
Dynamics DynamicsByName(const std::string& name);
std::vector<std::string> DynamicsNames();

// ---------------------------------------------------------------------------
// Axiom checkers. These examine one graph at a time; they falsify, they do
// not prove.

// For every u and every v of X_u: F(X_u) = F(X)_{R_X(u)} and
// R_X(u.v) = R_X(u).R_{X_u}(v).
CheckResult CheckShiftInvariance(const Dynamics& d, const CanonicalGraph& x);

// Every image vertex lies in the radius-b disk around some vertex of
// im R_X, i.e. within distance b+1 of it.
CheckResult CheckBoundedness(const Dynamics& d, const CanonicalGraph& x,
                             int bound);

// If X and Y agree on their radius-n disks, F(X) and F(Y) must agree on
// their radius-m disks and R_X, R_Y must agree on that codomain (and be
// determined inside the radius-n disks).
CheckResult ContinuityProbe(const Dynamics& d, const CanonicalGraph& x,
                            const CanonicalGraph& y, int m, int n);

}  // namespace cgd

#endif  // CGD_DYNAMICS_HPP_
