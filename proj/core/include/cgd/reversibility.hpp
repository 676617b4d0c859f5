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

#ifndef CGD_REVERSIBILITY_HPP_
#define CGD_REVERSIBILITY_HPP_

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "cgd/dynamics.hpp"
#include "cgd/family.hpp"

namespace cgd {

// F maps the family into itself, injectively and onto. The first failure is
// reported: an image outside the family, two members with the same image,
// or a member that is never reached.
CheckResult CheckBijectiveOnFamily(const Dynamics& d, const GraphFamily& fam);

// R_X is a bijection V(X) -> V(F(X)).
CheckResult CheckVertexPreserving(const Dynamics& d, const CanonicalGraph& x);

// u and v are shift-equivalent in X iff R_X(u) and R_X(v) are in F(X).
CheckResult CheckClassPreservation(const Dynamics& d, const CanonicalGraph& x);

// Members on which CheckVertexPreserving fails, in family order.
std::vector<CanonicalGraph> VertexPreservationExceptions(
    const Dynamics& d, const GraphFamily& fam);

// Tabulated inverse of a dynamics that is a bijection of a finite family.
//
// For Y = F(X) the inverse correspondence S_Y : V(Y) -> V(X) is the inverse
// of R_X when R_X is bijective. Otherwise S_Y(v') is the least vertex v of
// X (in canonical order) with R_X(v) shift-equivalent to v' in Y.
class InverseTable {
 public:
  const GraphFamily& family() const { return family_; }
  const std::string& name() const { return name_; }

  std::size_t size() const { return family_.size(); }
  const Step& forward(std::size_t i) const { return forward_[i]; }
  // Index of F^-1(y) in the family, if y is in the image.
  std::optional<std::size_t> backward(const CanonicalGraph& y) const;
  // S_{F(X_i)} for the i-th member X_i.
  const Correspondence& correspondence_inverse(std::size_t i) const {
    return inverse_[i];
  }

  // (F^-1, S). Throws Error for graphs outside the family's image.
  Dynamics AsDynamics(std::string name) const;

  // backward(forward(X)) = X for every member and forward(backward(Y)) = Y
  // for every image; both with the correspondences composing to
  // shift-equivalent vertices.
  CheckResult CheckCompositionIdentities() const;
  // R_X(S_{F(X)}(u')) is shift-equivalent to u' in F(X), for every u'.
  CheckResult CheckCorrespondenceInverse() const;

  // Pairs "X --- F(X)" separated by "---" lines, each pair preceded by a
  // comment listing S_{F(X)}.
  std::string Serialize() const;

 private:
  friend InverseTable BuildInverse(const Dynamics& d, const GraphFamily& fam);

  std::string name_;
  GraphFamily family_;
  std::vector<Step> forward_;
  std::vector<Correspondence> inverse_;
  std::unordered_map<CanonicalGraph, std::size_t, CanonicalGraphHash> back_;
};

// Throws Error unless F is a bijection of the family.
InverseTable BuildInverse(const Dynamics& d, const GraphFamily& fam);

}  // namespace cgd

#endif  // CGD_REVERSIBILITY_HPP_
