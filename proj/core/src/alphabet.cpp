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

#include <algorithm>
#include <set>

#include "cgd/error.hpp"

namespace cgd {
namespace {

bool ValidSymbol(std::string_view s, bool allow_extra) {
  if (s.empty()) return false;
  for (char c : s) {
    const bool word = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_' || c == '\'';
    const bool extra = c == '-' || c == '*';
    if (!word && !(allow_extra && extra)) return false;
  }
  return true;
}

void CheckDistinct(const std::vector<std::string>& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) {
      throw Error(std::string("duplicate ") + what + " '" + n + "'");
    }
  }
}

std::optional<std::int16_t> Find(const std::vector<std::string>& names,
                                 std::string_view name) {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<std::int16_t>(it - names.begin());
}

}  // namespace

// The naming scheme of Marked() is recognised, so a marked alphabet read
// back from text is again a marked alphabet.
AlphabetPtr Alphabet::RecognizeBase(const Alphabet& a) {
  auto primed = [](const std::vector<std::string>& names, std::size_t from,
                   std::vector<std::string>* base) {
    if ((names.size() - from) % 2 != 0) return false;
    for (std::size_t i = from; i < names.size(); i += 2) {
      const std::string& plain = names[i];
      if (names[i + 1] != plain + "'" || plain.empty() || plain.back() == '\'') {
        return false;
      }
      base->push_back(plain);
    }
    return true;
  };
  std::vector<std::string> ports, vlabels;
  if (!primed(a.ports_, 0, &ports)) return nullptr;
  if (a.vertex_labels_.size() < 2 || a.vertex_labels_[0] != "_" ||
      a.vertex_labels_[1] != "_'" || !primed(a.vertex_labels_, 2, &vlabels)) {
    return nullptr;
  }
  try {
    return Make(std::move(ports), std::move(vlabels), a.edge_labels_);
  } catch (const Error&) {
    return nullptr;
  }
}

AlphabetPtr Alphabet::Make(std::vector<std::string> ports,
                           std::vector<std::string> vertex_labels,
                           std::vector<std::string> edge_labels) {
  if (ports.empty()) throw Error("port alphabet must not be empty");
  for (const auto& p : ports) {
    if (!ValidSymbol(p, false) || p == "eps") {
      throw Error("invalid port symbol '" + p + "'");
    }
  }
  for (const auto& l : vertex_labels) {
    if (!ValidSymbol(l, true)) throw Error("invalid vertex label '" + l + "'");
  }
  for (const auto& l : edge_labels) {
    if (!ValidSymbol(l, true)) throw Error("invalid edge label '" + l + "'");
  }
  CheckDistinct(ports, "port");
  CheckDistinct(vertex_labels, "vertex label");
  CheckDistinct(edge_labels, "edge label");

  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  a->compact_ports_ = std::all_of(ports.begin(), ports.end(),
                                  [](const auto& p) { return p.size() == 1; });
  a->ports_ = std::move(ports);
  a->vertex_labels_ = std::move(vertex_labels);
  a->edge_labels_ = std::move(edge_labels);
  a->base_ = RecognizeBase(*a);
  return a;
}

AlphabetPtr Alphabet::Marked(const AlphabetPtr& base) {
  if (base == nullptr) throw Error("null base alphabet");
  if (base->is_marked()) throw Error("alphabet is already marked");
  auto a = std::shared_ptr<Alphabet>(new Alphabet());
  for (const auto& p : base->ports_) {
    a->ports_.push_back(p);
    a->ports_.push_back(p + "'");
  }
  a->vertex_labels_.push_back("_");
  a->vertex_labels_.push_back("_'");
  for (const auto& l : base->vertex_labels_) {
    a->vertex_labels_.push_back(l);
    a->vertex_labels_.push_back(l + "'");
  }
  a->edge_labels_ = base->edge_labels_;
  a->compact_ports_ = false;
  a->base_ = base;
  return a;
}

std::optional<PortId> Alphabet::find_port(std::string_view name) const {
  return Find(ports_, name);
}

std::optional<LabelId> Alphabet::find_vertex_label(
    std::string_view name) const {
  return Find(vertex_labels_, name);
}

std::optional<LabelId> Alphabet::find_edge_label(std::string_view name) const {
  return Find(edge_labels_, name);
}

bool SameAlphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (a == nullptr || b == nullptr) return false;
  return *a == *b;
}

}  // namespace cgd
