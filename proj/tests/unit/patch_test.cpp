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

#include "cgd/patch.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles/oracles.hpp"

namespace cgd {
namespace {

class PatchTest : public ::testing::Test {
 protected:
  AlphabetPtr al = Alphabet::Make({"a", "b"}, {"black", "white"}, {"e", "f"});

  // Token for a small integer, for brevity.
  Token T(int i) {
    Path p;
    for (int k = 0; k < i; ++k) p.push_back({0, 1});
    return Token{p, 0};
  }
  TokenSet S(std::initializer_list<int> ids) {
    std::vector<Token> t;
    for (int i : ids) t.push_back(T(i));
    return MakeTokenSet(t);
  }
};

TEST_F(PatchTest, SelfIsConsistentAndUnionIsIdempotent) {
  Patch g(al);
  g.add_vertex(S({0}), 0);
  g.add_vertex(S({1}));
  g.add_edge(0, 0, 1, 1, 0);
  EXPECT_TRUE(Consistent(g, g));
  const Patch u = Union(g, g);
  EXPECT_EQ(u.vertices().size(), 2u);
  EXPECT_EQ(u.edges().size(), 1u);
}

TEST_F(PatchTest, OverlappingButDifferentSetsAreInconsistent) {
  Patch g(al), h(al);
  g.add_vertex(S({1, 2}));
  h.add_vertex(S({2, 3}));
  const CheckResult r = Consistent(g, h);
  EXPECT_FALSE(r);
  EXPECT_NE(r.detail().find("(i)"), std::string::npos);
  EXPECT_THROW(Union(g, h), Error);
}

TEST_F(PatchTest, LabelDisagreementIsInconsistent) {
  Patch g(al), h(al);
  g.add_vertex(S({0}), 0);
  h.add_vertex(S({0}), 1);
  EXPECT_NE(Consistent(g, h).detail().find("(iv)"), std::string::npos);
  Patch k(al);
  k.add_vertex(S({0}));  // undefined label is compatible
  EXPECT_TRUE(Consistent(g, k));
  EXPECT_EQ(Union(k, g).vertices()[0].label, 0);
}

TEST_F(PatchTest, HalfEdgeDisagreement) {
  Patch g(al), h(al);
  g.add_vertex(S({0}));
  g.add_vertex(S({1}));
  g.add_edge(0, 0, 1, 1, 0);
  h.add_vertex(S({0}));
  h.add_vertex(S({2}));
  h.add_edge(0, 0, 1, 1);
  EXPECT_NE(Consistent(g, h).detail().find("(ii)"), std::string::npos);
  Patch k(al);
  k.add_vertex(S({0}));
  k.add_vertex(S({1}));
  k.add_edge(0, 0, 1, 1, 1);
  EXPECT_NE(Consistent(g, k).detail().find("(iii)"), std::string::npos);
}

TEST_F(PatchTest, DisjointUnionAndGluing) {
  Patch g(al), h(al);
  g.add_vertex(S({0}));
  g.add_vertex(S({1}));
  g.add_edge(0, 0, 1, 1);
  h.add_vertex(S({1}));
  h.add_vertex(S({2}));
  h.add_edge(0, 0, 1, 1);
  const Patch u = Union(g, h);
  EXPECT_EQ(u.vertices().size(), 3u);  // {1} appears once
  EXPECT_EQ(u.edges().size(), 2u);
  Patch far(al);
  far.add_vertex(S({7}));
  EXPECT_EQ(Union(g, far).vertices().size(), 3u);
}

TEST_F(PatchTest, TokenSetsRoundTripThroughText) {
  const TokenSet s = MakeTokenSet({T(0), Token{Path(), 3}, T(2)});
  const std::string text = FormatTokenSet(*al, s);
  EXPECT_EQ(text, "eps+eps#3+ab.ab");
  EXPECT_EQ(ParseTokenSet(*al, text), s);
  EXPECT_THROW(ParseTokenSet(*al, "eps#"), ParseError);
  EXPECT_THROW(ParseTokenSet(*al, "eps++ab"), ParseError);
}

TEST_F(PatchTest, AgreesWithSetOracleOnRandomPatches) {
  std::mt19937 rng(3);
  auto pick = [&](int k) { return std::uniform_int_distribution<int>(0, k - 1)(rng); };
  auto random_patch = [&](Patch& p, oracle::SetPatch& o) {
    // Vertices are disjoint sets drawn from a partition of 0..5.
    const int style = pick(2);
    std::vector<std::vector<int>> parts =
        style ? std::vector<std::vector<int>>{{0}, {1, 2}, {3}, {4, 5}}
              : std::vector<std::vector<int>>{{0}, {1}, {2, 3}, {4}, {5}};
    std::vector<std::size_t> idx;
    std::vector<std::set<int>> sets;
    for (const auto& part : parts) {
      if (pick(3) == 0) continue;
      std::vector<Token> toks;
      for (int i : part) toks.push_back(T(i));
      const LabelId l = static_cast<LabelId>(pick(3) - 1);
      idx.push_back(p.add_vertex(MakeTokenSet(toks), l));
      sets.emplace_back(part.begin(), part.end());
      o.vertices[sets.back()] = l;
    }
    for (int k = 0; k < 3 && !idx.empty(); ++k) {
      const int a = pick(static_cast<int>(idx.size()));
      const int b = pick(static_cast<int>(idx.size()));
      const PortId pa = static_cast<PortId>(pick(2));
      const PortId pb = static_cast<PortId>(pick(2));
      if ((a == b && pa == pb) || p.edge_at(idx[a], pa) || p.edge_at(idx[b], pb)) {
        continue;
      }
      const LabelId l = static_cast<LabelId>(pick(3) - 1);
      p.add_edge(idx[a], pa, idx[b], pb, l);
      o.half[{sets[a], pa}] = {{sets[b], pb}, l};
      o.half[{sets[b], pb}] = {{sets[a], pa}, l};
    }
  };
  int agreements = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    Patch g(al), h(al);
    oracle::SetPatch og, oh;
    random_patch(g, og);
    random_patch(h, oh);
    const bool expect = oracle::SetConsistent(og, oh);
    ASSERT_EQ(static_cast<bool>(Consistent(g, h)), expect) << trial;
    ASSERT_EQ(static_cast<bool>(Consistent(h, g)), expect) << trial;
    if (expect) {
      const Patch u = Union(g, h);
      std::set<std::set<int>> expected_vertices;
      for (const auto& [s, l] : og.vertices) expected_vertices.insert(s);
      for (const auto& [s, l] : oh.vertices) expected_vertices.insert(s);
      ASSERT_EQ(u.vertices().size(), expected_vertices.size());
      ++agreements;
    }
  }
  EXPECT_GT(agreements, 100);
}

}  // namespace
}  // namespace cgd
