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

#ifndef CGD_MARKED_HPP_
#define CGD_MARKED_HPP_

#include "cgd/canonical.hpp"
#include "cgd/dynamics.hpp"

namespace cgd {

// Marked graphs are canonical graphs over a marked alphabet (see
// Alphabet::Marked): every vertex carries a mark bit in its label and every
// half-edge a mark bit in its port. In a consistent marked graph the bit of
// a half-edge equals the mark of the vertex at the other end.

// All marks 0.
CanonicalGraph Lift(const CanonicalGraph& x);
// Forgets all marks. Throws Error if two ports of a vertex collapse onto
// the same base port.
CanonicalGraph DropMarks(const CanonicalGraph& x);

bool IsMarked(const CanonicalGraph& x, VertexIndex v);
std::size_t CountMarked(const CanonicalGraph& x);
bool AllMarked(const CanonicalGraph& x);
bool AllUnmarked(const CanonicalGraph& x);

// For every edge {u:(i,b), v:(j,c)}: c is the mark of u (and b that of v).
// Every vertex must carry a label.
CheckResult CheckMarkConsistency(const CanonicalGraph& x);

// The mark operation at the origin. If some edge {eps:i, v:j} has v:mu(j)
// already in use the graph is returned unchanged; otherwise the origin's
// mark is toggled, self-loops at the origin have both ports toggled and
// every other edge at the origin has its far port toggled. Vertices keep
// their identity.
Step Mark(const CanonicalGraph& x);
// Mark as a Dynamics over the marked alphabet of `base`.
Dynamics MarkDynamics(const AlphabetPtr& base);

// Base alphabet of a marked alphabet; throws Error for unmarked ones.
const AlphabetPtr& BaseAlphabet(const CanonicalGraph& x);

}  // namespace cgd

#endif  // CGD_MARKED_HPP_
