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

#ifndef CGD_BLOCKS_HPP_
#define CGD_BLOCKS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cgd/dynamics.hpp"
#include "cgd/family.hpp"
#include "cgd/marked.hpp"

namespace cgd {

// ---------------------------------------------------------------------------
// Shifted dynamics and products.

// L applied at vertex u: re-point at u, apply L, re-point at the image of
// the old origin. The correspondence follows every vertex through.
Step ShiftedApplyAt(const Dynamics& l, const CanonicalGraph& x, VertexIndex u);
// Same, with u given as a path; the identity if u does not resolve.
Step ShiftedApply(const Dynamics& l, const CanonicalGraph& x, const Path& u);

// Applies the blocks L_u for the anchors in order. Every anchor is resolved
// in x and then carried through the correspondence accumulated so far.
// When `panels` is given, the graph after each block is appended.
Step Product(const Dynamics& l, const CanonicalGraph& x,
             const std::vector<Path>& anchors,
             std::vector<CanonicalGraph>* panels = nullptr);

// Canonical names of all vertices, ascending.
std::vector<Path> AllAnchors(const CanonicalGraph& x);

// Runs the stages left to right, composing correspondences.
Dynamics ComposeDynamics(std::string name, const std::vector<Dynamics>& stages);

// ---------------------------------------------------------------------------
// Projections of a marked graph.

struct Component {
  // Least canonical name among the component's vertices; the component is
  // pointed there.
  Path anchor;
  CanonicalGraph graph;
  // Vertices of the marked graph in the component, ascending.
  std::vector<VertexIndex> vertices;
};

// Components of the subgraph induced on the unmarked vertices, as graphs
// over the base alphabet.
std::vector<Component> LowerProjection(const CanonicalGraph& x);
// Components after deleting every unmarked vertex that has no used marked
// port, as marked graphs.
std::vector<Component> UpperProjection(const CanonicalGraph& x);

// ---------------------------------------------------------------------------
// Reversible extension and conjugate mark.

// F' over the marked alphabet of `base`:
//   - all vertices unmarked: F, lifted;
//   - all vertices marked, or at most `exception_bound` vertices: identity;
//   - otherwise the upper projection is kept as is, F is applied to each
//     lower component, and the pieces are glued by consistency-checked
//     union. Vertices shared with the frozen part must come out of F
//     unchanged; a conflict throws Error.
Dynamics ReversibleExtension(const Dynamics& f, int exception_bound,
                             const AlphabetPtr& base);

// Smallest family containing the seeds and closed under F', the mark
// operation and re-pointing. Throws ResourceLimit past `cap` members
// (0: DefaultEnumerationCap()).
GraphFamily MarkedClosure(const Dynamics& extension,
                          const std::vector<CanonicalGraph>& seeds,
                          std::size_t cap = 0);

// Everything the block decomposition of F needs.
struct BlockSystem {
  Dynamics f;
  Dynamics extension;          // F'
  Dynamics extension_inverse;  // F'^-1
  Dynamics mark;               // mu
  Dynamics conjugate;          // K = F'^-1 . mu . F'
  // The marked family F'^-1 was tabulated on, when built that way.
  std::optional<GraphFamily> closure;
};

// F'^-1 tabulated over the closure of the lifted base family.
BlockSystem MakeBlockSystem(const Dynamics& f, int exception_bound,
                            const GraphFamily& base_family,
                            std::size_t cap = 0);
// F'^-1 taken as the reversible extension of a known inverse of F.
BlockSystem MakeBlockSystemFromInverse(const Dynamics& f,
                                       const Dynamics& f_inverse,
                                       int exception_bound,
                                       const AlphabetPtr& base);

// Default exception bound for the built-in dynamics (0 for moving head and
// identity, 2 for turtle); throws Error for dynamics without one.
int DefaultExceptionBound(const std::string& dynamics_name);

// ---------------------------------------------------------------------------
// Block decomposition.

struct DecompositionTrace {
  // Panel 0 is the lifted input; then one panel per K block and one per mu
  // block; the last panel has its marks dropped.
  std::vector<CanonicalGraph> panels;
  std::vector<std::string> captions;
  std::size_t conjugate_blocks = 0;
  std::size_t mark_blocks = 0;
  CanonicalGraph result;
  Correspondence correspondence;
};

// lift, then K at every vertex, then mu at every vertex, then drop marks.
DecompositionTrace BlockDecompose(const BlockSystem& s, const CanonicalGraph& x);
CanonicalGraph BlockDecomposeStep(const BlockSystem& s, const CanonicalGraph& x);

// Mark counts never decrease through the K phase and are zero at the end.
CheckResult CheckTraceShape(const DecompositionTrace& t);

// ---------------------------------------------------------------------------
// Locality.

// Vertices of `before` whose label or incident edges differ after `step`.
// Requires a vertex-preserving step.
std::vector<VertexIndex> AlteredVertices(const CanonicalGraph& before,
                                         const Step& step);

struct LocalityReport {
  // Every image vertex u' with |u'| > radius has a preimage u with equal
  // radius-0 disks.
  CheckResult local = CheckResult::Pass();
  // The same with radius-1 disks for |u'| > radius + 1.
  CheckResult to_the_t = CheckResult::Pass();
  // inflation[s] = largest |T(v)| seen for |v| <= s, s = 0..radius+1.
  std::vector<int> inflation;
};

LocalityReport CheckLocality(const Dynamics& l, int radius,
                             const GraphFamily& fam);
// Least radius in 0..max_radius for which CheckLocality passes.
std::optional<int> FindLocalityRadius(const Dynamics& l, const GraphFamily& fam,
                                      int max_radius);

struct FootprintReport {
  // Each K block alters nothing farther than `radius` from its anchor.
  CheckResult contained = CheckResult::Pass();
  // Largest distance from an anchor to a vertex its block altered.
  int max_reach = 0;
  // Largest number of K blocks whose radius-`radius` disk holds a vertex.
  std::size_t max_depth = 0;
  // |pi'|^radius.
  std::size_t depth_bound = 0;
};

FootprintReport CheckBlockFootprint(const BlockSystem& s,
                                    const CanonicalGraph& x, int radius);

}  // namespace cgd

#endif  // CGD_BLOCKS_HPP_
