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

#ifndef CGD_ALPHABET_HPP_
#define CGD_ALPHABET_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cgd {

using PortId = std::int16_t;
using LabelId = std::int16_t;

inline constexpr LabelId kNoLabel = -1;

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

// The port set (totally ordered by declaration) together with the vertex
// label set and the edge label set. Ports must be non-empty; either label set
// may be empty or a singleton.
//
// A marked alphabet is derived from a base alphabet: every base port p
// becomes the pair (p,0) named "p" and (p,1) named "p'", with index 2p+bit.
// Vertex labels become (sigma,bit) for sigma in the base labels plus an
// extra "unlabelled" entry, so that a vertex without a base label can still
// carry its mark: index 2(sigma+1)+bit, where sigma = -1 means unlabelled.
class Alphabet {
 public:
  static AlphabetPtr Make(std::vector<std::string> ports,
                          std::vector<std::string> vertex_labels,
                          std::vector<std::string> edge_labels);

  // Marked alphabet over `base`. Throws if `base` is itself marked. Make()
  // returns a marked alphabet too when given names following this scheme.
  static AlphabetPtr Marked(const AlphabetPtr& base);

  std::size_t port_count() const { return ports_.size(); }
  std::size_t vertex_label_count() const { return vertex_labels_.size(); }
  std::size_t edge_label_count() const { return edge_labels_.size(); }

  const std::string& port_name(PortId p) const { return ports_.at(p); }
  const std::string& vertex_label_name(LabelId l) const {
    return vertex_labels_.at(l);
  }
  const std::string& edge_label_name(LabelId l) const {
    return edge_labels_.at(l);
  }

  const std::vector<std::string>& ports() const { return ports_; }
  const std::vector<std::string>& vertex_labels() const {
    return vertex_labels_;
  }
  const std::vector<std::string>& edge_labels() const { return edge_labels_; }

  std::optional<PortId> find_port(std::string_view name) const;
  std::optional<LabelId> find_vertex_label(std::string_view name) const;
  std::optional<LabelId> find_edge_label(std::string_view name) const;

  // True iff every port name is a single character; paths then serialize
  // as "ab.cd" rather than "a,b.c,d".
  bool compact_ports() const { return compact_ports_; }

  bool is_marked() const { return base_ != nullptr; }
  const AlphabetPtr& base() const { return base_; }

  friend bool operator==(const Alphabet& a, const Alphabet& b) {
    return a.ports_ == b.ports_ && a.vertex_labels_ == b.vertex_labels_ &&
           a.edge_labels_ == b.edge_labels_;
  }

 private:
  Alphabet() = default;
  static AlphabetPtr RecognizeBase(const Alphabet& a);

  std::vector<std::string> ports_;
  std::vector<std::string> vertex_labels_;
  std::vector<std::string> edge_labels_;
  bool compact_ports_ = true;
  AlphabetPtr base_;
};

// Pointer-or-value equality.
bool SameAlphabet(const AlphabetPtr& a, const AlphabetPtr& b);

// Marked-alphabet index arithmetic.
inline PortId MarkedPort(PortId base_port, int bit) {
  return static_cast<PortId>(2 * base_port + bit);
}
inline PortId BasePort(PortId marked_port) {
  return static_cast<PortId>(marked_port / 2);
}
inline int PortBit(PortId marked_port) { return marked_port & 1; }
inline PortId TogglePort(PortId marked_port) {
  return static_cast<PortId>(marked_port ^ 1);
}
inline LabelId MarkedLabel(LabelId base_label, int bit) {
  return static_cast<LabelId>(2 * (base_label + 1) + bit);
}
// Returns kNoLabel for the "unlabelled" entry.
inline LabelId BaseLabel(LabelId marked_label) {
  return static_cast<LabelId>(marked_label / 2 - 1);
}
inline int LabelBit(LabelId marked_label) { return marked_label & 1; }
inline LabelId ToggleLabel(LabelId marked_label) {
  return static_cast<LabelId>(marked_label ^ 1);
}

}  // namespace cgd

#endif  // CGD_ALPHABET_HPP_
