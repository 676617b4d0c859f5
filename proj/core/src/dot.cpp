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

#include <sstream>
#include <utility>

#include "cgd/marked.hpp"
#include "cgd/path.hpp"

namespace cgd {
namespace {

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string ToDot(const CanonicalGraph& g, const DotOptions& options) {
  const Alphabet& al = *g.alphabet();
  const bool marked = al.is_marked();
  std::ostringstream out;
  out << "graph " << Quote(options.graph_name) << " {\n";
  if (!options.caption.empty()) {
    out << "  label=" << Quote(options.caption) << ";\n  labelloc=t;\n";
  }
  out << "  node [shape=circle, fontsize=10];\n"
      << "  edge [fontsize=8];\n";
  const auto n = static_cast<VertexIndex>(g.vertex_count());
  for (VertexIndex v = 0; v < n; ++v) {
    std::string text = FormatPath(al, g.name(v));
    if (g.label(v) != kNoLabel) text += "\\n" + al.vertex_label_name(g.label(v));
    out << "  v" << v << " [label=" << Quote(text);
    if (v == 0) out << ", peripheries=2";
    if (marked && g.label(v) != kNoLabel && IsMarked(g, v)) {
      out << ", style=filled, fillcolor=gray80";
    }
    out << "];\n";
  }
  for (VertexIndex v = 0; v < n; ++v) {
    for (PortId p = 0; p < static_cast<PortId>(g.port_count()); ++p) {
      const Slot& s = g.slot(v, p);
      if (!s.used() || std::make_pair(s.vertex, s.port) < std::make_pair(v, p)) {
        continue;
      }
      out << "  v" << v << " -- v" << s.vertex
          << " [taillabel=" << Quote(al.port_name(p))
          << ", headlabel=" << Quote(al.port_name(s.port));
      if (s.label != kNoLabel) {
        out << ", label=" << Quote(al.edge_label_name(s.label));
      }
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace cgd
