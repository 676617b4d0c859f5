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

#include "cgd/portgraph.hpp"

#include <gtest/gtest.h>

#include "cgd/text_format.hpp"
#include "unit/test_util.hpp"

namespace cgd {
namespace {

TEST(PortGraph, ConnectEnforcesPortUniqueness) {
  PortGraph g(2);
  g.add_vertex();
  g.add_vertex();
  g.connect(0, 0, 1, 1);
  EXPECT_THROW(g.connect(0, 0, 1, 0), Error);
  EXPECT_THROW(g.connect(1, 0, 1, 0), Error);  // same half-edge twice
  g.connect(1, 0, 0, 1);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.degree(0), 2u);
  g.disconnect(0, 0);
  EXPECT_FALSE(g.slot(1, 1).used());
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(PortGraph, SelfLoopOnDistinctPorts) {
  PortGraph g(2);
  g.add_vertex();
  g.connect(0, 0, 0, 1);
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.slot(0, 1).port, 0);
}

TEST(PortGraph, ComponentsAndDistances) {
  PortGraph g(2);
  for (int i = 0; i < 4; ++i) g.add_vertex();
  g.connect(0, 0, 1, 1);
  g.connect(2, 0, 3, 1);
  EXPECT_EQ(g.Components(),
            (std::vector<std::vector<VertexIndex>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(g.Distances(1), (std::vector<int>{1, 0, -1, -1}));
}

TEST(TextFormat, ParsesAndValidates) {
  const auto g = ParseGraph(
      "# a two-cell ring\n"
      "ports a b\nvlabels x\nelabels\n"
      "vertex u label=x\nvertex v\n"
      "edge u:a v:b\nedge u:b v:a\npointer u\n");
  EXPECT_EQ(g.graph.vertices().size(), 2u);
  EXPECT_EQ(g.graph.edges().size(), 2u);
  EXPECT_EQ(g.origin, "u");
  EXPECT_TRUE(Validate(g.graph));
}

TEST(TextFormat, ReportsLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      ParseGraph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("ports a b\nvertex u\nedge u:a u:c\npointer u\n"), 3u);
  EXPECT_EQ(line_of("ports a b\nvertex u\nvertex v\nedge u:a v:b\n"
                    "edge u:a v:a\npointer u\n"),
            5u);
  EXPECT_EQ(line_of("ports a b\nvertex u label=y\npointer u\n"), 2u);
  EXPECT_EQ(line_of("ports a b\nvertex u\nedge u:a w:b\npointer u\n"), 3u);
  EXPECT_EQ(line_of("ports a b\nvertex u\nvertex u\npointer u\n"), 3u);
  EXPECT_EQ(line_of("ports a b\nvertex u\nbogus\n"), 3u);
  EXPECT_THROW(ParseGraph("ports a b\nvertex u\n"), ParseError);
}

TEST(TextFormat, DisconnectedGraphIsRejectedOnCanonicalization) {
  EXPECT_THROW(ParseCanonicalGraph("ports a b\nvertex u\nvertex v\npointer u\n"),
               ParseError);
}

TEST(TextFormat, MultipleDocuments) {
  const std::string one = "ports a\nvertex u\npointer u\n";
  const auto gs = ParseGraphs(one + "---\n" + one);
  EXPECT_EQ(gs.size(), 2u);
}

TEST(Validate, NamesFirstBreach) {
  auto alpha = Alphabet::Make({"a", "b"}, {}, {});
  RawGraph g(alpha);
  g.add_vertex("u");
  g.add_vertex("v");
  g.add_edge("u", 0, "v", 1);
  g.add_edge("v", 1, "u", 1);
  const CheckResult r = Validate(g);
  EXPECT_FALSE(r);
  EXPECT_NE(r.detail().find("v:b"), std::string::npos) << r.detail();
}

}  // namespace
}  // namespace cgd
