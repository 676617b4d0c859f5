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

#include "cgd/reversibility.hpp"

#include <memory>

#include "cgd/modulo.hpp"
#include "cgd/text_format.hpp"

namespace cgd {

namespace {

std::string Name(const CanonicalGraph& g, VertexIndex v) {
  return FormatPath(*g.alphabet(), g.name(v));
}

std::string Brief(const CanonicalGraph& g) {
  return "graph with " + std::to_string(g.vertex_count()) + " vertices:\n" +
         FormatGraphBody(ToRawGraph(g), true);
}

}  // namespace

CheckResult CheckBijectiveOnFamily(const Dynamics& d, const GraphFamily& fam) {
  std::vector<int> preimage(fam.size(), -1);
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const Step st = d.Apply(fam[i]);
    const auto j = fam.index_of(st.image);
    if (!j) {
      return CheckResult::Fail("image escapes the family: F maps member " +
                               std::to_string(i) + " to a " +
                               Brief(st.image));
    }
    if (preimage[*j] >= 0) {
      return CheckResult::Fail("not injective: members " +
                               std::to_string(preimage[*j]) + " and " +
                               std::to_string(i) + " both map to member " +
                               std::to_string(*j));
    }
    preimage[*j] = static_cast<int>(i);
  }
  for (std::size_t j = 0; j < fam.size(); ++j) {
    if (preimage[j] < 0) {
      return CheckResult::Fail("not surjective: member " + std::to_string(j) +
                               " is never reached");
    }
  }
  return CheckResult::Pass();
}

CheckResult CheckVertexPreserving(const Dynamics& d, const CanonicalGraph& x) {
  const Step st = d.Apply(x);
  std::vector<VertexIndex> hit(st.image.vertex_count(), kNoVertex);
  for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
    const VertexIndex w = st.correspondence[v];
    if (hit[w] != kNoVertex) {
      return CheckResult::Fail("R_X not injective: " + Name(x, hit[w]) +
                               " and " + Name(x, v) + " both map to " +
                               Name(st.image, w));
    }
    hit[w] = v;
  }
  for (VertexIndex w = 0; w < static_cast<VertexIndex>(hit.size()); ++w) {
    if (hit[w] == kNoVertex) {
      return CheckResult::Fail("R_X not surjective: image vertex " +
                               Name(st.image, w) + " is not reached");
    }
  }
  return CheckResult::Pass();
}

CheckResult CheckClassPreservation(const Dynamics& d,
                                   const CanonicalGraph& x) {
  const Step st = d.Apply(x);
  const auto cx = ShiftEquivalenceClassIndex(x);
  const auto cy = ShiftEquivalenceClassIndex(st.image);
  const auto n = static_cast<VertexIndex>(x.vertex_count());
  for (VertexIndex u = 0; u < n; ++u) {
    for (VertexIndex v = u + 1; v < n; ++v) {
      const bool before = cx[u] == cx[v];
      const bool after = cy[st.correspondence[u]] == cy[st.correspondence[v]];
      if (before != after) {
        return CheckResult::Fail(
            Name(x, u) + " and " + Name(x, v) +
            (before ? " are shift-equivalent but their images are not"
                    : " are not shift-equivalent but their images are"));
      }
    }
  }
  return CheckResult::Pass();
}

std::vector<CanonicalGraph> VertexPreservationExceptions(
    const Dynamics& d, const GraphFamily& fam) {
  std::vector<CanonicalGraph> out;
  for (const CanonicalGraph& x : fam) {
    if (!CheckVertexPreserving(d, x)) out.push_back(x);
  }
  return out;
}

// ---------------------------------------------------------------------------

InverseTable BuildInverse(const Dynamics& d, const GraphFamily& fam) {
  if (CheckResult r = CheckBijectiveOnFamily(d, fam); !r) {
    throw Error("cannot invert " + d.name() + ": " + r.detail());
  }
  InverseTable t;
  t.name_ = d.name();
  t.family_ = fam;
  for (std::size_t i = 0; i < fam.size(); ++i) {
    const CanonicalGraph& x = fam[i];
    Step st = d.Apply(x);
    const CanonicalGraph& y = st.image;
    Correspondence s(y.vertex_count(), kNoVertex);
    if (CheckVertexPreserving(d, x)) {
      for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count());
           ++v) {
        s[st.correspondence[v]] = v;
      }
    } else {
      const auto cy = ShiftEquivalenceClassIndex(y);
      for (VertexIndex w = 0; w < static_cast<VertexIndex>(y.vertex_count());
           ++w) {
        for (VertexIndex v = 0;
             v < static_cast<VertexIndex>(x.vertex_count()); ++v) {
          if (cy[st.correspondence[v]] == cy[w]) {
            s[w] = v;
            break;
          }
        }
        if (s[w] == kNoVertex) {
          throw Error("cannot invert " + d.name() + ": image vertex " +
                      Name(y, w) +
                      " is not shift-equivalent to any vertex of im R_X");
        }
      }
    }
    t.back_.emplace(y, i);
    t.forward_.push_back(std::move(st));
    t.inverse_.push_back(std::move(s));
  }
  return t;
}

std::optional<std::size_t> InverseTable::backward(
    const CanonicalGraph& y) const {
  auto it = back_.find(y);
  if (it == back_.end()) return std::nullopt;
  return it->second;
}

Dynamics InverseTable::AsDynamics(std::string name) const {
  auto self = std::make_shared<const InverseTable>(*this);
  return Dynamics(std::move(name), family_.alphabet(),
                  [self](const CanonicalGraph& y) {
                    const auto i = self->backward(y);
                    if (!i) {
                      throw Error("inverse of " + self->name() +
                                  " is not tabulated for this " + Brief(y));
                    }
                    return Step{self->family()[*i],
                                self->correspondence_inverse(*i)};
                  });
}

CheckResult InverseTable::CheckCompositionIdentities() const {
  for (std::size_t i = 0; i < size(); ++i) {
    const auto b = backward(forward_[i].image);
    if (!b || *b != i) {
      return CheckResult::Fail("backward(forward(X)) != X for member " +
                               std::to_string(i));
    }
    // forward(backward(Y)) = Y for the image Y of member i.
    if (!(forward_[*b].image == forward_[i].image)) {
      return CheckResult::Fail("forward(backward(Y)) != Y for member " +
                               std::to_string(i));
    }
    // S after R returns every vertex of X to a shift-equivalent vertex.
    const CanonicalGraph& x = family_[i];
    const auto cx = ShiftEquivalenceClassIndex(x);
    for (VertexIndex v = 0; v < static_cast<VertexIndex>(x.vertex_count());
         ++v) {
      const VertexIndex back = inverse_[i][forward_[i].correspondence[v]];
      if (cx[back] != cx[v]) {
        return CheckResult::Fail("S(R(v)) not shift-equivalent to v = " +
                                 Name(x, v) + " in member " +
                                 std::to_string(i));
      }
    }
  }
  return CheckResult::Pass();
}

CheckResult InverseTable::CheckCorrespondenceInverse() const {
  for (std::size_t i = 0; i < size(); ++i) {
    const CanonicalGraph& y = forward_[i].image;
    const auto cy = ShiftEquivalenceClassIndex(y);
    for (VertexIndex w = 0; w < static_cast<VertexIndex>(y.vertex_count());
         ++w) {
      const VertexIndex back = forward_[i].correspondence[inverse_[i][w]];
      if (cy[back] != cy[w]) {
        return CheckResult::Fail("R_X(S(u')) not shift-equivalent to u' = " +
                                 Name(y, w) + " in member " +
                                 std::to_string(i));
      }
    }
  }
  return CheckResult::Pass();
}

std::string InverseTable::Serialize() const {
  std::string out;
  for (std::size_t i = 0; i < size(); ++i) {
    const CanonicalGraph& y = forward_[i].image;
    if (i > 0) out += "---\n";
    out += "# pair " + std::to_string(i) + ": X then F(X); S:";
    for (VertexIndex w = 0; w < static_cast<VertexIndex>(y.vertex_count());
         ++w) {
      out += " " + Name(y, w) + "->" + Name(family_[i], inverse_[i][w]);
    }
    out += "\n" + SerializeGraph(family_[i]) + "---\n" + SerializeGraph(y);
  }
  return out;
}

}  // namespace cgd
