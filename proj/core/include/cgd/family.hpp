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

#ifndef CGD_FAMILY_HPP_
#define CGD_FAMILY_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgd/canonical.hpp"

namespace cgd {

// A finite, duplicate-free, ordered set of pointed graphs over one
// alphabet. Members are kept in ascending canonical order.
class GraphFamily {
 public:
  GraphFamily() = default;
  GraphFamily(AlphabetPtr alphabet, std::vector<CanonicalGraph> members);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<CanonicalGraph>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  const CanonicalGraph& operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool contains(const CanonicalGraph& g) const;
  std::optional<std::size_t> index_of(const CanonicalGraph& g) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<CanonicalGraph> members_;
  std::unordered_map<CanonicalGraph, std::size_t, CanonicalGraphHash> index_;
};

using GraphPredicate = std::function<bool(const CanonicalGraph&)>;

struct EnumerationOptions {
  std::size_t max_vertices = 1;
  // Largest number of graphs the search may hold; exceeding it throws
  // ResourceLimit. Defaults to DefaultEnumerationCap().
  std::size_t cap = 0;
  // Graphs rejected here are dropped together with everything grown from
  // them, so the predicate must be closed under taking connected
  // subgraphs that contain the origin.
  GraphPredicate prune;
  // Applied to the final result only.
  GraphPredicate filter;
};

// 2,000,000 unless the environment variable CGD_ENUM_CAP holds a positive
// integer.
std::size_t DefaultEnumerationCap();

// Every connected pointed graph with at most max_vertices vertices, every
// vertex labelled when the vertex alphabet is non-empty and every edge
// labelled when the edge alphabet is non-empty. Grown one vertex or one
// edge at a time from single vertices, deduplicating by canonical form.
GraphFamily EnumerateFamily(const AlphabetPtr& alphabet,
                            const EnumerationOptions& options);

// Same set, computed by canonicalizing every labelled partial matching of
// half-edges on n <= max_vertices vertices from every origin. Exponential;
// meant for cross-checking small cases. Throws ResourceLimit past the cap.
GraphFamily BruteForceFamily(const AlphabetPtr& alphabet,
                             std::size_t max_vertices, std::size_t cap = 0);

// ---------------------------------------------------------------------------
// Hand-built families.

// Tape of `length` cells t0..t(L-1) joined by {ti:a, t(i+1):b}, plus a head
// vertex attached to cell `head_cell` by cc (or dd when `forward` is
// false). Pointed at `pointer` (0..L-1 are cells, L is the head).
CanonicalGraph SingleHeadTape(int length, int head_cell, bool forward,
                              int pointer = 0);
// A bare tape, pointed at t0.
CanonicalGraph BareTape(int length, int pointer = 0);

// True iff g is a tape with exactly one head attached by cc or dd, pointed
// at the first cell (the cell with no b-edge).
bool IsSingleHeadTape(const CanonicalGraph& g);

// Tapes of length 1..max_length with one head, pointed at the first cell:
// 2L configurations per length.
GraphFamily SingleHeadTapes(int max_length);
// The same configurations under every pointing.
GraphFamily SingleHeadTapesPointed(int max_length);
// Rings of L cells ({ti:a, t(i+1 mod L):b}) with any set of cc/dd heads,
// at most max_vertices vertices in total, every pointing.
GraphFamily HeadRings(int max_vertices);

// rows x cols grid (a up, b right, c down, d left), labels given row by
// row (0 = black, 1 = white), pointed at the cell (pointer_row, pointer_col).
CanonicalGraph Grid(int rows, int cols, const std::vector<LabelId>& labels,
                    int pointer_row = 0, int pointer_col = 0);
// All r x c grids with r, c <= max_side in every colouring, pointed at the
// top-left cell; with every pointing when `all_pointers`.
GraphFamily Grids(int max_side, bool all_pointers = false);

// Named families for the command line:
//   all, symmetric, asymmetric               (generic, over `alphabet`)
//   single-head-tape, single-head-tape-pointed, head-ring   (moving head)
//   grid, grid-pointed                       (inflating grid)
// `size` bounds the vertex count: tapes have length <= size - 1, grids
// have sides <= 3 and at most `size` cells. Throws Error for unknown names.
GraphFamily NamedFamily(const std::string& name, const AlphabetPtr& alphabet,
                        std::size_t size);
std::vector<std::string> FamilyNames();

}  // namespace cgd

#endif  // CGD_FAMILY_HPP_
