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

#include "cgd/local_rule.hpp"

#include <gtest/gtest.h>

#include "cgd/family.hpp"
#include "unit/test_util.hpp"

namespace cgd {
namespace {

TEST(LocalRule, IdentityRuleReproducesInput) {
  const LocalRule id = IdentityLocalRule();
  for (const CanonicalGraph& x : SingleHeadTapesPointed(4)) {
    const Step st = ApplyLocalRule(id, x);
    ASSERT_EQ(st.image, x);
    ASSERT_EQ(st.correspondence, IdentityCorrespondence(x.vertex_count()));
  }
}

TEST(LocalRule, InflatingGridAgreesWithDirectCode) {
  const LocalRule rule = InflatingGridLocalRule();
  const Dynamics direct = InflatingGrid();
  for (const CanonicalGraph& x : Grids(3, true)) {
    const Step a = ApplyLocalRule(rule, x);
    const Step b = direct.Apply(x);
    ASSERT_EQ(a.image, b.image);
    ASSERT_EQ(a.correspondence, b.correspondence);
  }
}

TEST(LocalRule, InflatingGridHandlesNonGridEdges) {
  // A self-loop and an a-a edge: the rule is total on every port pair.
  const CanonicalGraph x = testing::G(
      "ports a b c d\nvlabels black white\nelabels",
      "vertex u label=black\nvertex v label=white\n"
      "edge u:a u:c\nedge u:b v:b\npointer u");
  const Step a = ApplyLocalRule(InflatingGridLocalRule(), x);
  const Step b = InflatingGrid().Apply(x);
  EXPECT_EQ(a.image, b.image);
  EXPECT_EQ(a.image.vertex_count(), 8u);
}

TEST(LocalRule, ConflictingPatchesNameBothVertices) {
  // Every vertex claims its a-neighbour with a label equal to its own:
  // on a two-coloured line neighbours disagree.
  const LocalRule bad(
      "bad", GridAlphabet(), 0, [](const DiskGraph& d) {
        Patch p(d.graph.alphabet());
        p.add_vertex({Token{Path(), 0}}, d.graph.label(0));
        for (VertexIndex v = 1; v < static_cast<VertexIndex>(d.graph.vertex_count()); ++v) {
          p.add_vertex({Token{d.graph.name(v), 0}}, d.graph.label(0));
        }
        p.set_successor(0);
        return p;
      });
  try {
    ApplyLocalRule(bad, Grid(1, 2, {0, 1}));
    FAIL() << "expected an inconsistency";
  } catch (const Error& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("patches at eps and bd"), std::string::npos) << msg;
  }
}

TEST(LocalRule, LookupTableRoundTripsThroughText) {
  const GraphFamily grids = Grids(2);
  const std::vector<CanonicalGraph> xs(grids.begin(), grids.end());
  const LookupRule table = Tabulate(InflatingGridLocalRule(), xs);
  const std::string text = SerializeRuleFile(table);
  const LookupRule parsed = ParseRuleFile(text);
  EXPECT_EQ(parsed.size(), table.size());
  EXPECT_EQ(SerializeRuleFile(parsed), text);
  const LocalRule f = parsed.ToLocalRule("table");
  for (const CanonicalGraph& x : xs) {
    ASSERT_EQ(ApplyLocalRule(f, x).image, InflatingGrid().Apply(x).image);
  }
  // A grid the table has never seen.
  EXPECT_THROW(ApplyLocalRule(f, Grid(3, 3, std::vector<LabelId>(9, 0))), Error);
}

TEST(LocalRule, RuleFileErrors) {
  const std::string head = "ports a b\nvlabels x\nelabels\nradius 0\n";
  EXPECT_THROW(ParseRuleFile(head + "rule\nvertex u label=x\npointer u\n"
                                    "maps-to\nvertex eps label=x\nend\n"),
               ParseError);  // missing successor
  EXPECT_THROW(ParseRuleFile(head + "rule\nvertex u label=x\nvertex v label=x\n"
                                    "edge u:a v:b\npointer u\nmaps-to\n"
                                    "vertex eps\nsuccessor eps\nend\n"),
               ParseError);  // labelled rim: not a radius-0 disk
  EXPECT_THROW(ParseRuleFile("ports a b\nradius -1\n"), ParseError);
  const LookupRule ok = ParseRuleFile(
      head + "rule\nvertex u label=x\npointer u\nmaps-to\n"
             "vertex eps label=x\nvertex eps#1 label=x\nedge eps:a eps#1:b\n"
             "successor eps\nend\n");
  EXPECT_EQ(ok.size(), 1u);
}

}  // namespace
}  // namespace cgd
