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

#ifndef EDGECOVER_GRAPH_H_
#define EDGECOVER_GRAPH_H_

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "edgecover/rational.h"

namespace edgecover {

using VertexId = std::int32_t;
using Weight = std::int64_t;

struct Edge {
  VertexId u;
  VertexId v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph with nonnegative integer vertex weights. Vertices
// are the dense ids 0..n-1. The graph is validated on construction and never
// changes afterwards, so a single instance can be shared by concurrent
// solvers.
//
// Edges are stored normalized (u < v) and sorted, so two graphs built from the
// same edge set in different orders compare equal.
class Graph {
 public:
  Graph(VertexId n, std::vector<Weight> weights, std::vector<Edge> edges);
  // Unit weights.
  Graph(VertexId n, std::vector<Edge> edges);

  VertexId num_vertices() const { return n_; }
  std::int64_t num_edges() const { return static_cast<std::int64_t>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight weight(VertexId v) const { return weights_[v]; }
  std::int64_t degree(VertexId v) const {
    return static_cast<std::int64_t>(adjacency_[v].size());
  }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  bool HasEdge(VertexId u, VertexId v) const;
  Weight total_weight() const { return total_weight_; }
  bool HasUniformWeights() const;

  // Same topology, different weights.
  Graph WithWeights(std::vector<Weight> weights) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.weights_ == b.weights_ && a.edges_ == b.edges_;
  }

 private:
  VertexId n_;
  std::vector<Weight> weights_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  Weight total_weight_ = 0;
};

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  // Sorts and removes duplicates. Ids are checked against a graph only when
  // the set is used with one.
  explicit VertexSet(std::vector<VertexId> members);
  VertexSet(std::initializer_list<VertexId> members)
      : VertexSet(std::vector<VertexId>(members)) {}

  static VertexSet All(VertexId n);
  // V \ this, for a graph on n vertices.
  VertexSet Complement(VertexId n) const;

  const std::vector<VertexId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool Contains(VertexId v) const;
  // Dense membership mask of length n; throws InputError on an id >= n.
  std::vector<bool> Mask(VertexId n) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<VertexId> members_;
};

// A vertex set together with its audited weight and touched-edge count.
struct Solution {
  VertexSet set;
  Weight weight = 0;
  std::int64_t touched = 0;
};

Solution MakeSolution(const Graph& g, VertexSet set);

// Counting primitives. All throw InputError on a vertex id outside [0, n).

// deg(U): sum of the degrees of the members of U.
std::int64_t DegSum(const Graph& g, const VertexSet& u);
// e(U): edges with both endpoints in U.
std::int64_t InternalEdges(const Graph& g, const VertexSet& u);
// e(X, Y) for disjoint X and Y; overlapping sets are an InputError.
std::int64_t CrossEdges(const Graph& g, const VertexSet& x, const VertexSet& y);
// t(U): edges with at least one endpoint in U, counted by scanning the edge
// list. Always equals DegSum(U) - InternalEdges(U).
std::int64_t Touched(const Graph& g, const VertexSet& u);
// w(U), with overflow checking.
Weight WeightOf(const Graph& g, const VertexSet& u);

// Generators. Vertices get unit weights.
Graph GenerateGnp(VertexId n, const Rational& p, std::uint64_t seed);
Graph GeneratePath(VertexId n);
Graph GenerateStar(VertexId leaves);  // vertex 0 is the center
Graph GenerateComplete(VertexId n);
// Uniform random weights in [1, max_weight], reproducible from seed.
std::vector<Weight> RandomWeights(VertexId n, Weight max_weight,
                                  std::uint64_t seed);

}  // namespace edgecover

#endif  // EDGECOVER_GRAPH_H_
