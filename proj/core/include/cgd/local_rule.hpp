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

#ifndef CGD_LOCAL_RULE_HPP_
#define CGD_LOCAL_RULE_HPP_

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cgd/dynamics.hpp"
#include "cgd/modulo.hpp"
#include "cgd/patch.hpp"

namespace cgd {

// A local function f from radius-r disks to patches. Patch tokens are
// relative to the disk's centre: token (p, k) denotes the vertex at path p
// from the centre (k = 0) or the k-th fresh vertex created on its behalf.
// Every patch must designate a successor for the centre.
class LocalRule {
 public:
  using Function = std::function<Patch(const DiskGraph&)>;

  LocalRule(std::string name, AlphabetPtr alphabet, int radius, Function f);

  const std::string& name() const { return name_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }
  int radius() const { return radius_; }
  Patch operator()(const DiskGraph& disk) const { return (*fn_)(disk); }

 private:
  std::string name_;
  AlphabetPtr alphabet_;
  int radius_;
  std::shared_ptr<const Function> fn_;
};

// Applies f to the disk around every vertex u, translates the tokens of
// each patch by u, and takes the union. The image is pointed at the
// successor of the origin and R_X(u) is the successor of u. Throws Error
// naming two offending vertices if their patches are inconsistent.
Step ApplyLocalRule(const LocalRule& f, const CanonicalGraph& x);

Dynamics AsDynamics(const LocalRule& f);

// Copies the radius-0 disk: the rule whose global effect is the identity.
// A null alphabet accepts any.
LocalRule IdentityLocalRule(AlphabetPtr alphabet = nullptr);

// The inflating grid written as a radius-0 rule.
LocalRule InflatingGridLocalRule();

// Exact-match lookup table from disks to patches.
class LookupRule {
 public:
  LookupRule(AlphabetPtr alphabet, int radius)
      : alphabet_(std::move(alphabet)), radius_(radius) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int radius() const { return radius_; }
  // Throws Error if the disk has the wrong radius or is already present.
  void add(DiskGraph disk, Patch patch);
  std::size_t size() const { return entries_.size(); }
  const std::vector<std::pair<DiskGraph, Patch>>& entries() const {
    return entries_;
  }
  // Throws Error when the disk is missing.
  const Patch& lookup(const DiskGraph& disk) const;

  LocalRule ToLocalRule(std::string name) const;

 private:
  AlphabetPtr alphabet_;
  int radius_;
  std::vector<std::pair<DiskGraph, Patch>> entries_;
  std::unordered_map<CanonicalGraph, std::size_t, CanonicalGraphHash> index_;
};

// Rule file format:
//
//   ports ... / vlabels ... / elabels ...
//   radius <r>
//   rule
//   <vertex/edge/pointer lines: the disk, ids are free-form>
//   maps-to
//   <vertex/edge lines: the patch, ids are token sets such as eps+ab#1>
//   successor <id>
//   end
//   rule
//   ...
LookupRule ParseRuleFile(std::string_view text);
// Entries in the order they were added.
std::string SerializeRuleFile(const LookupRule& rule);

// Tabulates f over every disk of the given graphs.
LookupRule Tabulate(const LocalRule& f, const std::vector<CanonicalGraph>& xs);

}  // namespace cgd

#endif  // CGD_LOCAL_RULE_HPP_
