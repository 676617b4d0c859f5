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

#include "cgd/alphabet.hpp"

#include <gtest/gtest.h>

#include "cgd/error.hpp"

namespace cgd {
namespace {

TEST(Alphabet, LooksUpSymbolsByName) {
  auto a = Alphabet::Make({"a", "b"}, {"black", "white"}, {"e"});
  EXPECT_EQ(a->port_count(), 2u);
  EXPECT_EQ(a->find_port("b"), PortId{1});
  EXPECT_FALSE(a->find_port("c"));
  EXPECT_EQ(a->find_vertex_label("white"), LabelId{1});
  EXPECT_EQ(a->find_edge_label("e"), LabelId{0});
  EXPECT_TRUE(a->compact_ports());
}

TEST(Alphabet, RejectsBadDeclarations) {
  EXPECT_THROW(Alphabet::Make({}, {}, {}), Error);
  EXPECT_THROW(Alphabet::Make({"a", "a"}, {}, {}), Error);
  EXPECT_THROW(Alphabet::Make({"eps"}, {}, {}), Error);
  EXPECT_THROW(Alphabet::Make({"a:b"}, {}, {}), Error);
  EXPECT_THROW(Alphabet::Make({"a"}, {"x", "x"}, {}), Error);
}

TEST(Alphabet, MarkedDoublesPortsAndLabels) {
  auto base = Alphabet::Make({"a", "b"}, {"x"}, {});
  auto m = Alphabet::Marked(base);
  ASSERT_TRUE(m->is_marked());
  EXPECT_EQ(m->port_count(), 4u);
  EXPECT_EQ(m->port_name(MarkedPort(1, 1)), "b'");
  EXPECT_EQ(BasePort(MarkedPort(1, 1)), 1);
  EXPECT_EQ(PortBit(MarkedPort(1, 1)), 1);
  EXPECT_EQ(TogglePort(MarkedPort(0, 0)), MarkedPort(0, 1));
  // unlabelled + x, each with two marks
  EXPECT_EQ(m->vertex_label_count(), 4u);
  EXPECT_EQ(BaseLabel(MarkedLabel(kNoLabel, 1)), kNoLabel);
  EXPECT_EQ(BaseLabel(MarkedLabel(0, 1)), 0);
  EXPECT_EQ(LabelBit(ToggleLabel(MarkedLabel(0, 0))), 1);
  EXPECT_FALSE(m->compact_ports());
  EXPECT_THROW(Alphabet::Marked(m), Error);
}

TEST(Alphabet, EqualityIsByValue) {
  auto a = Alphabet::Make({"a", "b"}, {"x"}, {});
  auto b = Alphabet::Make({"a", "b"}, {"x"}, {});
  auto c = Alphabet::Make({"b", "a"}, {"x"}, {});
  EXPECT_TRUE(SameAlphabet(a, b));
  EXPECT_FALSE(SameAlphabet(a, c));
}

}  // namespace
}  // namespace cgd
