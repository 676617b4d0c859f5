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

#include "cgd/reversibility.hpp"

#include <gtest/gtest.h>

#include "cgd/modulo.hpp"
#include "cgd/text_format.hpp"
#include "oracles/oracles.hpp"
#include "unit/test_util.hpp"

namespace cgd {
namespace {

// Sends both pointings of the two-vertex path {u:a, v:b} to turtle graph B,
// merging two graphs whose vertices are not shift-equivalent into one
// whose vertices are.
Dynamics MergeIntoB() {
  return Dynamics("merge", TurtleAlphabet(), [](const CanonicalGraph& x) {
    const CanonicalGraph pu = testing::G(
        testing::kAB, "vertex u label=x\nvertex v label=x\nedge u:a v:b\npointer u");
    const CanonicalGraph pv = ShiftTo(pu, 1).graph;
    if (x == pu || x == pv) return Step{TurtleGraphB(), Correspondence{0, 1}};
    return Step{x, IdentityCorrespondence(x.vertex_count())};
  });
}

TEST(Reversibility, IdentityIsBijectiveAndSelfInverse) {
  const GraphFamily fam = SingleHeadTapes(3);
  EXPECT_TRUE(CheckBijectiveOnFamily(IdentityDynamics(), fam));
  const InverseTable t = BuildInverse(IdentityDynamics(), fam);
  for (std::size_t i = 0; i < t.size(); ++i) {
    EXPECT_EQ(t.correspondence_inverse(i),
              IdentityCorrespondence(fam[i].vertex_count()));
  }
}

TEST(Reversibility, MovingHeadIsBijectiveOnTapes) {
  for (int len = 1; len <= 5; ++len) {
    EXPECT_TRUE(CheckBijectiveOnFamily(MovingHead(), SingleHeadTapes(len)));
    EXPECT_TRUE(CheckBijectiveOnFamily(MovingHead(), SingleHeadTapesPointed(len)));
  }
  for (const CanonicalGraph& x : SingleHeadTapesPointed(5)) {
    ASSERT_TRUE(CheckVertexPreserving(MovingHead(), x));
  }
}

TEST(Reversibility, InflatingGridEscapesAnyFamily) {
  const CheckResult r = CheckBijectiveOnFamily(InflatingGrid(), Grids(2));
  ASSERT_FALSE(r);
  EXPECT_NE(r.detail().find("escapes"), std::string::npos);
}

TEST(Reversibility, TurtleExceptionsAreExactlyAAndB) {
  EnumerationOptions opt;
  opt.max_vertices = 4;
  const GraphFamily fam = EnumerateFamily(TurtleAlphabet(), opt);
  ASSERT_TRUE(CheckBijectiveOnFamily(Turtle(), fam));
  const auto ex = VertexPreservationExceptions(Turtle(), fam);
  ASSERT_EQ(ex.size(), 2u);
  EXPECT_TRUE((ex[0] == TurtleGraphA() && ex[1] == TurtleGraphB()) ||
              (ex[1] == TurtleGraphA() && ex[0] == TurtleGraphB()));
  const CheckResult r = CheckVertexPreserving(Turtle(), TurtleGraphA());
  EXPECT_NE(r.detail().find("not surjective"), std::string::npos);
}

TEST(Reversibility, ClassPreservation) {
  for (const CanonicalGraph& x : HeadRings(6)) {
    ASSERT_TRUE(CheckClassPreservation(MovingHead(), x));
    ASSERT_TRUE(CheckClassPreservation(IdentityDynamics(), x));
  }
  const CanonicalGraph pu = testing::G(
      testing::kAB, "vertex u label=x\nvertex v label=x\nedge u:a v:b\npointer u");
  EXPECT_FALSE(CheckClassPreservation(MergeIntoB(), pu));
}

TEST(Reversibility, MovingHeadInverseTable) {
  const GraphFamily fam = SingleHeadTapesPointed(5);
  const InverseTable t = BuildInverse(MovingHead(), fam);
  EXPECT_TRUE(t.CheckCompositionIdentities());
  EXPECT_TRUE(t.CheckCorrespondenceInverse());
  // The tabulated inverse moves heads backwards, like the coded inverse.
  const Dynamics inv = t.AsDynamics("moving-head-table-inverse");
  for (const CanonicalGraph& y : fam) {
    const Step a = inv.Apply(y);
    const Step b = MovingHeadInverse().Apply(y);
    ASSERT_EQ(a.image, b.image);
    ASSERT_EQ(a.correspondence, b.correspondence);
  }
  EXPECT_THROW(inv.Apply(BareTape(2)), Error);
}

TEST(Reversibility, TurtleIsItsOwnInverse) {
  const GraphFamily fam(TurtleAlphabet(), {TurtleGraphA(), TurtleGraphB()});
  const InverseTable t = BuildInverse(Turtle(), fam);
  EXPECT_TRUE(t.CheckCompositionIdentities());
  EXPECT_TRUE(t.CheckCorrespondenceInverse());
  const Dynamics inv = t.AsDynamics("turtle-inverse");
  for (const CanonicalGraph& y : fam) {
    EXPECT_EQ(inv.Apply(y).image, Turtle().Apply(y).image);
  }
}

TEST(Reversibility, BuildInverseRejectsNonBijections) {
  EXPECT_THROW(BuildInverse(InflatingGrid(), Grids(1)), Error);
}

TEST(Reversibility, SerializedPairsParseBack) {
  const GraphFamily fam = SingleHeadTapes(2);
  const InverseTable t = BuildInverse(MovingHead(), fam);
  const auto graphs = ParseCanonicalGraphs(t.Serialize());
  ASSERT_EQ(graphs.size(), 2 * fam.size());
  for (std::size_t i = 0; i < fam.size(); ++i) {
    EXPECT_EQ(graphs[2 * i], fam[i]);
    EXPECT_EQ(graphs[2 * i + 1], t.forward(i).image);
  }
}

}  // namespace
}  // namespace cgd
