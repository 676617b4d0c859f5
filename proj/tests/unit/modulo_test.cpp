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

#include "cgd/modulo.hpp"

#include <gtest/gtest.h>

#include "cgd/family.hpp"
#include "unit/test_util.hpp"

namespace cgd {
namespace {

using testing::G;
using testing::kAB;

// Ring of n vertices joined a -> b.
CanonicalGraph Ring(int n) {
  std::string body;
  for (int i = 0; i < n; ++i) body += "vertex v" + std::to_string(i) + " label=x\n";
  for (int i = 0; i < n; ++i) {
    body += "edge v" + std::to_string(i) + ":a v" + std::to_string((i + 1) % n) +
            ":b\n";
  }
  return G(kAB, body + "pointer v0");
}

CanonicalGraph Line(int n) {
  std::string body;
  for (int i = 0; i < n; ++i) body += "vertex v" + std::to_string(i) + " label=x\n";
  for (int i = 0; i + 1 < n; ++i) {
    body += "edge v" + std::to_string(i) + ":a v" + std::to_string(i + 1) +
            ":b\n";
  }
  return G(kAB, body + "pointer v0");
}

TEST(Modulo, ResolveFollowsPortPairs) {
  const CanonicalGraph g = Line(3);
  const Alphabet& al = *g.alphabet();
  EXPECT_TRUE(Resolve(g, ParsePath(al, "ab.ab")));
  EXPECT_FALSE(Resolve(g, ParsePath(al, "ba")));
  EXPECT_FALSE(Resolve(g, ParsePath(al, "aa")));
  EXPECT_EQ(Resolve(g, ParsePath(al, "ab.ba")), 0);
}

TEST(Modulo, ShiftThenShiftBackIsIdentity) {
  const CanonicalGraph g = Line(4);
  for (VertexIndex v = 0; v < 4; ++v) {
    const Path& u = g.name(v);
    EXPECT_EQ(Shift(Shift(g, u), u.Reversed()), g);
  }
  EXPECT_THROW(Shift(g, ParsePath(*g.alphabet(), "ba")), Error);
}

TEST(Modulo, ShiftOfARingIsTheSameRing) {
  const CanonicalGraph g = Ring(5);
  for (VertexIndex v = 0; v < 5; ++v) EXPECT_EQ(ShiftTo(g, v).graph, g);
  EXPECT_EQ(ShiftEquivalenceClasses(g).size(), 1u);
  EXPECT_FALSE(IsAsymmetric(g));
  EXPECT_TRUE(IsAsymmetric(Line(4)));
}

TEST(Modulo, DiskKeepsRimUnlabelled) {
  const CanonicalGraph g = Line(5);
  const DiskGraph d0 = Disk(g, 0);
  ASSERT_EQ(d0.graph.vertex_count(), 2u);
  EXPECT_EQ(d0.graph.label(0), 0);
  EXPECT_EQ(d0.graph.label(1), kNoLabel);
  const DiskGraph d1 = Disk(g, 1);
  EXPECT_EQ(d1.graph.vertex_count(), 3u);
  EXPECT_EQ(d1.graph.label(1), 0);
  // Two long lines agree on small disks around their first vertex.
  EXPECT_EQ(Disk(Line(5), 2), Disk(Line(6), 2));
  EXPECT_FALSE(Disk(Line(3), 2) == Disk(Line(6), 2));
}

TEST(Modulo, DiskIncludesRimEdges) {
  // Triangle: both distance-1 vertices are joined to each other.
  const CanonicalGraph g = Ring(3);
  EXPECT_EQ(Disk(g, 0).graph.graph().edge_count(), 3u);
}

TEST(Modulo, PrimalExtensionOfARing) {
  // Full ring has no free port: an edge is cut and a line is attached.
  const CanonicalGraph ring = Ring(4);
  ASSERT_TRUE(HasPrimalHost(ring));
  const CanonicalGraph ext = PrimalExtension(ring);
  EXPECT_EQ(ext.vertex_count(), 7u);  // least prime above 4 + 2
  EXPECT_TRUE(IsAsymmetric(ext));
  EXPECT_THROW(PrimalExtension(Line(3)), Error);  // already asymmetric
  EXPECT_EQ(PrimalExtension(Line(3), {.force = true}).vertex_count(), 7u);
}

TEST(Modulo, PrimeHelpers) {
  EXPECT_EQ(NextPrimeAbove(4), 5u);
  EXPECT_EQ(NextPrimeAbove(5), 7u);
  EXPECT_FALSE(IsPrime(1));
  EXPECT_TRUE(IsPrime(13));
}

TEST(Modulo, ShiftEquivalenceClassesHaveEqualSize) {
  EnumerationOptions opt;
  opt.max_vertices = 5;
  const GraphFamily fam =
      EnumerateFamily(Alphabet::Make({"a", "b"}, {"x"}, {}), opt);
  for (const CanonicalGraph& g : fam) {
    const auto classes = ShiftEquivalenceClasses(g);
    for (const auto& c : classes) ASSERT_EQ(c.size(), classes[0].size());
  }
}

}  // namespace
}  // namespace cgd
