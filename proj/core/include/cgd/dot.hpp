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

#ifndef CGD_DOT_HPP_
#define CGD_DOT_HPP_

#include <string>

#include "cgd/canonical.hpp"

namespace cgd {

struct DotOptions {
  std::string graph_name = "G";
  std::string caption;  // drawn as the graph label when non-empty
};

// Graphviz source for a pointed graph. The output depends only on the
// canonical form, so isomorphic graphs give identical text. The origin has
// a double border; in marked graphs, marked vertices are filled gray.
std::string ToDot(const CanonicalGraph& g, const DotOptions& options = {});

}  // namespace cgd

#endif  // CGD_DOT_HPP_
