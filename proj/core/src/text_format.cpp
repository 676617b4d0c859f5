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

#include "cgd/text_format.hpp"

#include <fstream>
#include <sstream>

#include "cgd/error.hpp"

namespace cgd {
namespace {

const std::string* LabelOption(const TextLine& line, std::size_t from) {
  if (line.tokens.size() <= from) return nullptr;
  if (line.tokens.size() > from + 1) {
    throw ParseError(line.number, "unexpected token '" +
                                      line.tokens[from + 1] + "'");
  }
  const std::string& t = line.tokens[from];
  if (t.rfind("label=", 0) != 0) {
    throw ParseError(line.number, "expected label=<value>, got '" + t + "'");
  }
  return &t;
}

RawHalfEdge ParseHalfEdge(const Alphabet& alphabet, const TextLine& line,
                          const std::string& token) {
  const std::size_t colon = token.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == token.size()) {
    throw ParseError(line.number, "malformed half-edge '" + token + "'");
  }
  const std::string port = token.substr(colon + 1);
  auto p = alphabet.find_port(port);
  if (!p) throw ParseError(line.number, "unknown port '" + port + "'");
  return RawHalfEdge{token.substr(0, colon), *p};
}

}  // namespace

std::vector<TextLine> TokenizeLines(std::string_view text) {
  std::vector<TextLine> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++number;
    // '#' starts a comment only at the beginning of a token; patch vertex
    // ids use it as a tag separator.
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '#' &&
          (i == 0 || line[i - 1] == ' ' || line[i - 1] == '\t')) {
        line = line.substr(0, i);
        break;
      }
    }
    std::istringstream in{std::string(line)};
    TextLine tl{number, {}};
    for (std::string tok; in >> tok;) tl.tokens.push_back(tok);
    if (!tl.tokens.empty()) out.push_back(std::move(tl));
    start = end + 1;
  }
  return out;
}

AlphabetPtr ParseAlphabetHeader(const std::vector<TextLine>& lines,
                                std::size_t& pos) {
  std::vector<std::string> ports, vlabels, elabels;
  bool have_ports = false, have_v = false, have_e = false;
  std::size_t first_line = pos < lines.size() ? lines[pos].number : 0;
  while (pos < lines.size()) {
    const TextLine& line = lines[pos];
    const std::string& kw = line.tokens[0];
    std::vector<std::string> rest(line.tokens.begin() + 1, line.tokens.end());
    if (kw == "ports") {
      if (have_ports) throw ParseError(line.number, "duplicate ports line");
      ports = std::move(rest);
      have_ports = true;
    } else if (kw == "vlabels") {
      if (have_v) throw ParseError(line.number, "duplicate vlabels line");
      vlabels = std::move(rest);
      have_v = true;
    } else if (kw == "elabels") {
      if (have_e) throw ParseError(line.number, "duplicate elabels line");
      elabels = std::move(rest);
      have_e = true;
    } else {
      break;
    }
    ++pos;
  }
  if (!have_ports) throw ParseError(first_line, "missing ports line");
  try {
    return Alphabet::Make(std::move(ports), std::move(vlabels),
                          std::move(elabels));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(first_line, e.what());
  }
}

PointedRawGraph ParseGraphBody(const AlphabetPtr& alphabet,
                               const std::vector<TextLine>& lines,
                               std::size_t& pos, bool require_pointer) {
  PointedRawGraph out{RawGraph(alphabet), {}};
  bool have_pointer = false;
  std::size_t last_line = 0;
  while (pos < lines.size()) {
    const TextLine& line = lines[pos];
    const std::string& kw = line.tokens[0];
    last_line = line.number;
    if (kw == "vertex") {
      if (line.tokens.size() < 2) {
        throw ParseError(line.number, "vertex needs an id");
      }
      const std::string& id = line.tokens[1];
      if (out.graph.has_vertex(id)) {
        throw ParseError(line.number, "vertex " + id + " declared twice");
      }
      std::optional<LabelId> label;
      if (const std::string* opt = LabelOption(line, 2)) {
        const std::string name = opt->substr(6);
        label = alphabet->find_vertex_label(name);
        if (!label) {
          throw ParseError(line.number, "unknown vertex label '" + name + "'");
        }
      }
      out.graph.add_vertex(id, label);
    } else if (kw == "edge") {
      if (line.tokens.size() < 3) {
        throw ParseError(line.number, "edge needs two half-edges");
      }
      RawHalfEdge a = ParseHalfEdge(*alphabet, line, line.tokens[1]);
      RawHalfEdge b = ParseHalfEdge(*alphabet, line, line.tokens[2]);
      for (const RawHalfEdge* h : {&a, &b}) {
        if (!out.graph.has_vertex(h->vertex)) {
          throw ParseError(line.number,
                           "edge uses undeclared vertex " + h->vertex);
        }
      }
      std::optional<LabelId> label;
      if (const std::string* opt = LabelOption(line, 3)) {
        const std::string name = opt->substr(6);
        label = alphabet->find_edge_label(name);
        if (!label) {
          throw ParseError(line.number, "unknown edge label '" + name + "'");
        }
      }
      out.graph.add_edge(a.vertex, a.port, b.vertex, b.port, label);
      if (CheckResult r = Validate(out.graph); !r) {
        throw ParseError(line.number, r.detail());
      }
    } else if (kw == "pointer") {
      if (line.tokens.size() != 2) {
        throw ParseError(line.number, "pointer needs exactly one id");
      }
      if (have_pointer) throw ParseError(line.number, "duplicate pointer");
      if (!out.graph.has_vertex(line.tokens[1])) {
        throw ParseError(line.number,
                         "pointer to undeclared vertex " + line.tokens[1]);
      }
      out.origin = line.tokens[1];
      have_pointer = true;
    } else {
      break;
    }
    ++pos;
  }
  if (require_pointer && !have_pointer) {
    throw ParseError(last_line, "missing pointer line");
  }
  return out;
}

namespace {

std::vector<std::vector<TextLine>> SplitDocuments(std::string_view text) {
  std::vector<std::vector<TextLine>> docs(1);
  for (TextLine& line : TokenizeLines(text)) {
    if (line.tokens.size() == 1 && line.tokens[0] == "---") {
      docs.emplace_back();
    } else {
      docs.back().push_back(std::move(line));
    }
  }
  if (docs.back().empty()) docs.pop_back();
  return docs;
}

PointedRawGraph ParseDocument(const std::vector<TextLine>& lines) {
  std::size_t pos = 0;
  AlphabetPtr alphabet = ParseAlphabetHeader(lines, pos);
  PointedRawGraph g = ParseGraphBody(alphabet, lines, pos, true);
  if (pos != lines.size()) {
    throw ParseError(lines[pos].number,
                     "unexpected directive '" + lines[pos].tokens[0] + "'");
  }
  return g;
}

CanonicalGraph ToCanonical(const PointedRawGraph& g) {
  try {
    return Canonicalize(g);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(0, e.what());
  }
}

}  // namespace

PointedRawGraph ParseGraph(std::string_view text) {
  auto docs = SplitDocuments(text);
  if (docs.size() != 1) {
    throw ParseError(0, "expected exactly one graph, found " +
                            std::to_string(docs.size()));
  }
  return ParseDocument(docs[0]);
}

std::vector<PointedRawGraph> ParseGraphs(std::string_view text) {
  std::vector<PointedRawGraph> out;
  for (const auto& doc : SplitDocuments(text)) {
    out.push_back(ParseDocument(doc));
  }
  return out;
}

CanonicalGraph ParseCanonicalGraph(std::string_view text) {
  return ToCanonical(ParseGraph(text));
}

std::vector<CanonicalGraph> ParseCanonicalGraphs(std::string_view text) {
  std::vector<CanonicalGraph> out;
  for (const auto& g : ParseGraphs(text)) out.push_back(ToCanonical(g));
  return out;
}

std::string FormatAlphabetHeader(const Alphabet& alphabet) {
  std::string out = "ports";
  for (const auto& p : alphabet.ports()) out += " " + p;
  out += "\nvlabels";
  for (const auto& l : alphabet.vertex_labels()) out += " " + l;
  out += "\nelabels";
  for (const auto& l : alphabet.edge_labels()) out += " " + l;
  out += "\n";
  return out;
}

std::string FormatGraphBody(const PointedRawGraph& g, bool with_pointer) {
  const Alphabet& alpha = *g.graph.alphabet();
  std::string out;
  for (std::size_t i = 0; i < g.graph.vertices().size(); ++i) {
    out += "vertex " + g.graph.vertices()[i];
    if (const auto& l = g.graph.labels()[i]) {
      out += " label=" + alpha.vertex_label_name(*l);
    }
    out += "\n";
  }
  for (const RawEdge& e : g.graph.SortedEdges()) {
    out += "edge " + e.first.vertex + ":" + alpha.port_name(e.first.port) +
           " " + e.second.vertex + ":" + alpha.port_name(e.second.port);
    if (e.label) out += " label=" + alpha.edge_label_name(*e.label);
    out += "\n";
  }
  if (with_pointer) out += "pointer " + g.origin + "\n";
  return out;
}

std::string SerializeGraph(const PointedRawGraph& g) {
  return FormatAlphabetHeader(*g.graph.alphabet()) + FormatGraphBody(g, true);
}

std::string SerializeGraph(const CanonicalGraph& g) {
  return SerializeGraph(ToRawGraph(g));
}

std::string SerializeGraphs(std::span<const CanonicalGraph> graphs) {
  std::string out;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (i > 0) out += "---\n";
    out += SerializeGraph(graphs[i]);
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot write " + path);
  out << contents;
  if (!out) throw std::ios_base::failure("write failed for " + path);
}

}  // namespace cgd
