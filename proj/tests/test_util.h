// Copyright 2026 The edgecover Authors.
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


#ifndef EDGECOVER_TESTS_TEST_UTIL_H_
#define EDGECOVER_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <random>
#include <vector>

#include "edgecover/graph.h"

namespace edgecover::testing {

// G(n, q) with q drawn per graph, weights uniform in [1, max_weight]
// (max_weight = 1 gives unit weights).
inline Graph RandomGraph(std::mt19937_64& rng, VertexId n, Weight max_weight) {
  std::uniform_real_distribution<double> density(0.0, 1.0);
  const double q = density(rng);
  std::bernoulli_distribution coin(q);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  std::uniform_int_distribution<Weight> w(1, max_weight);
  std::vector<Weight> weights(n);
  for (auto& x : weights) x = w(rng);
  return Graph(n, std::move(weights), std::move(edges));
}

inline VertexSet RandomSubset(std::mt19937_64& rng, VertexId n) {
  std::bernoulli_distribution coin(0.5);
  std::vector<VertexId> ids;
  for (VertexId v = 0; v < n; ++v) {
    if (coin(rng)) ids.push_back(v);
  }
  return VertexSet(std::move(ids));
}

// Two disjoint edges (0,2) and (1,3). For W = 2 the best pair touches one
// edge, the cheapest degree sum does not tell the two kinds of pair apart.
inline Graph TwoDisjointEdges() { return Graph(4, {{0, 2}, {1, 3}}); }

}  // namespace edgecover::testing

#endif  // EDGECOVER_TESTS_TEST_UTIL_H_
