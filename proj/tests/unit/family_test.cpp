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

#include <gtest/gtest.h>

#include <cstdlib>

#include "cgd/dynamics.hpp"
#include "cgd/modulo.hpp"

namespace cgd {
namespace {

TEST(Family, SingleVertexCounts) {
  EnumerationOptions opt;
  opt.max_vertices = 1;
  // bare vertex and the a-b self-loop
  EXPECT_EQ(EnumerateFamily(Alphabet::Make({"a", "b"}, {"x"}, {}), opt).size(), 2u);
  // one port: no edge is possible, only the label varies
  EXPECT_EQ(EnumerateFamily(Alphabet::Make({"a"}, {"x", "y"}, {}), opt).size(), 2u);
}

TEST(Family, GeneratorsAgreeOnSmallCases) {
  const std::vector<AlphabetPtr> alphabets = {
      Alphabet::Make({"a", "b"}, {"x"}, {}),
      Alphabet::Make({"a", "b"}, {"x", "y"}, {}),
      Alphabet::Make({"a", "b"}, {}, {"e", "f"}),
      Alphabet::Make({"a", "b", "c"}, {"x"}, {}),
  };
  for (const AlphabetPtr& al : alphabets) {
    const std::size_t max = al->port_count() == 3 ? 3 : 4;
    EnumerationOptions opt;
    opt.max_vertices = max;
    const GraphFamily fast = EnumerateFamily(al, opt);
    const GraphFamily slow = BruteForceFamily(al, max);
    ASSERT_EQ(fast.size(), slow.size());
    for (std::size_t i = 0; i < fast.size(); ++i) ASSERT_EQ(fast[i], slow[i]);
  }
}

TEST(Family, MembersAreSortedAndUnique) {
  EnumerationOptions opt;
  opt.max_vertices = 4;
  const GraphFamily fam = EnumerateFamily(Alphabet::Make({"a", "b"}, {"x"}, {}), opt);
  for (std::size_t i = 1; i < fam.size(); ++i) ASSERT_LT(fam[i - 1], fam[i]);
  EXPECT_EQ(fam.index_of(fam[3]), 3u);
}

TEST(Family, CapRaisesResourceLimit) {
  EnumerationOptions opt;
  opt.max_vertices = 6;
  opt.cap = 50;
  EXPECT_THROW(EnumerateFamily(Alphabet::Make({"a", "b", "c"}, {"x"}, {}), opt),
               ResourceLimit);
}

TEST(Family, SingleHeadTapeCountMatchesHandCount) {
  EXPECT_EQ(SingleHeadTapes(3).size(), 12u);
  // The generic generator, filtered by the recognizer, finds the same
  // configurations up to length 2 (three vertices).
  EnumerationOptions opt;
  opt.max_vertices = 3;
  opt.filter = IsSingleHeadTape;
  const GraphFamily generic = EnumerateFamily(MovingHeadAlphabet(), opt);
  const GraphFamily built = SingleHeadTapes(2);
  ASSERT_EQ(generic.size(), built.size());
  for (std::size_t i = 0; i < built.size(); ++i) EXPECT_EQ(generic[i], built[i]);
}

TEST(Family, RecognizerRejectsNonTapes) {
  EXPECT_TRUE(IsSingleHeadTape(SingleHeadTape(4, 2, false)));
  EXPECT_FALSE(IsSingleHeadTape(SingleHeadTape(4, 2, false, 1)));
  EXPECT_FALSE(IsSingleHeadTape(BareTape(3)));
}

TEST(Family, GridsAndRings) {
  EXPECT_EQ(Grids(1).size(), 2u);
  EXPECT_EQ(Grids(2, true).size(), 2u + 2 * 4 * 2 + 16 * 4);
  const GraphFamily rings = HeadRings(3);
  EXPECT_FALSE(rings.empty());
  EXPECT_THROW(NamedFamily("nope", GridAlphabet(), 3), Error);
  EXPECT_THROW(NamedFamily("grid", MovingHeadAlphabet(), 3), Error);
  EXPECT_EQ(NamedFamily("single-head-tape", MovingHeadAlphabet(), 4).size(), 12u);
}

}  // namespace
}  // namespace cgd
