// Copyright 2026 The cgsep Authors
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


#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "cgsep/errors.hpp"

namespace cgsep {

/// Simple undirected graph on vertices 1..n. Edges are stored as (a, b) with a < b.
class GraphSpec {
 public:
  using Edge = std::pair<int, int>;

  GraphSpec(int n, const std::vector<Edge>& edges) : n_(n) {
    detail::require(n_ >= 2, "graph needs at least 2 vertices");
    for (auto [a, b] : edges) {
      detail::require(a >= 1 && a <= n_ && b >= 1 && b <= n_,
                      "edge {" + std::to_string(a) + "," + std::to_string(b) + "} has a vertex outside 1.." +
                          std::to_string(n_));
      detail::require(a != b, "self-loop on vertex " + std::to_string(a));
      const Edge e = std::minmax(a, b);
      detail::require(edges_.insert(e).second,
                      "duplicate edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "}");
    }
  }

  static GraphSpec complete(int n) {
    std::vector<Edge> e;
    for (int a = 1; a <= n; ++a)
      for (int b = a + 1; b <= n; ++b) e.emplace_back(a, b);
    return GraphSpec(n, e);
  }

  /// Path 1-2-...-n.
  static GraphSpec chain(int n) {
    std::vector<Edge> e;
    for (int a = 1; a < n; ++a) e.emplace_back(a, a + 1);
    return GraphSpec(n, e);
  }

  /// Vertex 1 joined to every other vertex.
  static GraphSpec star(int n) {
    std::vector<Edge> e;
    for (int b = 2; b <= n; ++b) e.emplace_back(1, b);
    return GraphSpec(n, e);
  }

  static GraphSpec edgeless(int n) { return GraphSpec(n, {}); }

  int n() const { return n_; }
  const std::set<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool adjacent(int a, int b) const { return edges_.count(std::minmax(a, b)) > 0; }

 private:
  int n_;
  std::set<Edge> edges_;
};

}  // namespace cgsep
