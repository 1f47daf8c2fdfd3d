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

#include "edgecover/graph.h"

#include <algorithm>
#include <random>
#include <string>

#include "edgecover/error.h"

namespace edgecover {
namespace {

void CheckIds(const Graph& g, const VertexSet& u) {
  for (VertexId v : u) {
    if (v < 0 || v >= g.num_vertices()) {
      throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(g.num_vertices()) + ")");
    }
  }
}

Weight CheckedAdd(Weight a, Weight b) {
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("weight sum exceeds 64-bit range");
  }
  return out;
}

}  // namespace

Graph::Graph(VertexId n, std::vector<Weight> weights, std::vector<Edge> edges)
    : n_(n), weights_(std::move(weights)), edges_(std::move(edges)) {
  if (n_ < 1) throw InputError("graph needs at least one vertex");
  if (static_cast<VertexId>(weights_.size()) != n_) {
    throw InputError("expected " + std::to_string(n_) + " weights, got " +
                     std::to_string(weights_.size()));
  }
  for (VertexId v = 0; v < n_; ++v) {
    if (weights_[v] < 0) {
      throw InputError("negative weight on vertex " + std::to_string(v));
    }
    total_weight_ = CheckedAdd(total_weight_, weights_[v]);
  }
  for (Edge& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw InputError("edge endpoint out of range: " + std::to_string(e.u) +
                       " " + std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw InputError("self-loop on vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  const auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw InputError("parallel edge " + std::to_string(dup->u) + " " +
                     std::to_string(dup->v));
  }
  adjacency_.resize(n_);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

Graph::Graph(VertexId n, std::vector<Edge> edges)
    : Graph(n, std::vector<Weight>(n > 0 ? n : 0, 1), std::move(edges)) {}

bool Graph::HasEdge(VertexId u, VertexId v) const {
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::HasUniformWeights() const {
  return std::adjacent_find(weights_.begin(), weights_.end(),
                            std::not_equal_to<>()) == weights_.end();
}

Graph Graph::WithWeights(std::vector<Weight> weights) const {
  return Graph(n_, std::move(weights), edges_);
}

VertexSet::VertexSet(std::vector<VertexId> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet VertexSet::All(VertexId n) {
  std::vector<VertexId> ids(n);
  for (VertexId v = 0; v < n; ++v) ids[v] = v;
  return VertexSet(std::move(ids));
}

VertexSet VertexSet::Complement(VertexId n) const {
  const auto mask = Mask(n);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (!mask[v]) out.push_back(v);
  }
  return VertexSet(std::move(out));
}

bool VertexSet::Contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::Mask(VertexId n) const {
  std::vector<bool> mask(n, false);
  for (VertexId v : members_) {
    if (v < 0 || v >= n) {
      throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(n) + ")");
    }
    mask[v] = true;
  }
  return mask;
}

Solution MakeSolution(const Graph& g, VertexSet set) {
  Solution s;
  s.weight = WeightOf(g, set);
  s.touched = Touched(g, set);
  s.set = std::move(set);
  return s;
}

std::int64_t DegSum(const Graph& g, const VertexSet& u) {
  CheckIds(g, u);
  std::int64_t sum = 0;
  for (VertexId v : u) sum += g.degree(v);
  return sum;
}

std::int64_t InternalEdges(const Graph& g, const VertexSet& u) {
  const auto mask = u.Mask(g.num_vertices());
  std::int64_t count = 0;
  for (VertexId v : u) {
    for (VertexId x : g.neighbors(v)) {
      if (x > v && mask[x]) ++count;
    }
  }
  return count;
}

std::int64_t CrossEdges(const Graph& g, const VertexSet& x,
                        const VertexSet& y) {
  const auto in_x = x.Mask(g.num_vertices());
  const auto in_y = y.Mask(g.num_vertices());
  for (VertexId v : y) {
    if (in_x[v]) {
      throw InputError("cross-edge count needs disjoint sets; vertex " +
                       std::to_string(v) + " is in both");
    }
  }
  std::int64_t count = 0;
  for (VertexId v : x) {
    for (VertexId w : g.neighbors(v)) {
      if (in_y[w]) ++count;
    }
  }
  return count;
}

std::int64_t Touched(const Graph& g, const VertexSet& u) {
  const auto mask = u.Mask(g.num_vertices());
  std::int64_t count = 0;
  for (const Edge& e : g.edges()) {
    if (mask[e.u] || mask[e.v]) ++count;
  }
  return count;
}

Weight WeightOf(const Graph& g, const VertexSet& u) {
  CheckIds(g, u);
  Weight sum = 0;
  for (VertexId v : u) sum = CheckedAdd(sum, g.weight(v));
  return sum;
}

Graph GenerateGnp(VertexId n, const Rational& p, std::uint64_t seed) {
  if (n < 1) throw InputError("G(n,p) needs n >= 1");
  if (p < Rational(0) || p > Rational(1)) {
    throw InputError("edge probability " + p.ToString() + " outside [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> draw(0, p.den() - 1);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (draw(rng) < p.num()) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph GeneratePath(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph GenerateStar(VertexId leaves) {
  if (leaves < 0) throw InputError("star needs a nonnegative leaf count");
  std::vector<Edge> edges;
  for (VertexId v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph(leaves + 1, std::move(edges));
}

Graph GenerateComplete(VertexId n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

std::vector<Weight> RandomWeights(VertexId n, Weight max_weight,
                                  std::uint64_t seed) {
  if (max_weight < 1) throw InputError("max weight must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Weight> draw(1, max_weight);
  std::vector<Weight> w(n);
  for (auto& x : w) x = draw(rng);
  return w;
}

}  // namespace edgecover
