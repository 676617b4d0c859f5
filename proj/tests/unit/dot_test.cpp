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

#include "cgd/dot.hpp"

#include <gtest/gtest.h>

#include "cgd/family.hpp"
#include "cgd/marked.hpp"
#include "cgd/modulo.hpp"

namespace cgd {
namespace {

std::size_t Count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto p = s.find(what); p != std::string::npos; p = s.find(what, p + 1)) ++n;
  return n;
}

TEST(Dot, OneNodePerVertexAndOneLinePerEdge) {
  const CanonicalGraph x = SingleHeadTape(3, 1, true);
  const std::string dot = ToDot(x);
  EXPECT_EQ(dot.rfind("graph \"G\" {", 0), 0u);
  EXPECT_EQ(Count(dot, "[label="), 4u);
  EXPECT_EQ(Count(dot, " -- "), 3u);
  EXPECT_EQ(Count(dot, "peripheries=2"), 1u);
  EXPECT_NE(dot.find("\"eps\\nx\""), std::string::npos);
}

TEST(Dot, DependsOnlyOnTheCanonicalForm) {
  const CanonicalGraph x = SingleHeadTape(3, 2, false, 1);
  EXPECT_EQ(ToDot(x), ToDot(ShiftTo(x, 0).graph));
  EXPECT_NE(ToDot(x), ToDot(ShiftTo(x, 2).graph));
}

TEST(Dot, MarkedVerticesAreFilled) {
  const CanonicalGraph m = Mark(Lift(BareTape(2))).image;
  const std::string dot = ToDot(m, {"panel", "mu at eps"});
  EXPECT_EQ(Count(dot, "fillcolor=gray80"), 1u);
  EXPECT_NE(dot.find("label=\"mu at eps\""), std::string::npos);
  EXPECT_NE(dot.find("headlabel=\"b'\""), std::string::npos);
}

}  // namespace
}  // namespace cgd
