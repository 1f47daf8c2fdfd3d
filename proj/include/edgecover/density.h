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

// Degrees density augmentation: given U, find a nonempty W outside U that
// maximizes (e(W) + e(U, W)) / deg(W).
//
// For a fixed rho the quantity max_W e(W) + e(U,W) - rho deg(W) is read off a
// minimum s-t cut in a network with one node per edge inside V \ U and one
// node per vertex of V \ U. A binary search on rho followed by a snap to the
// simplest fraction in the final interval gives the optimum exactly.

#ifndef EDGECOVER_DENSITY_H_
#define EDGECOVER_DENSITY_H_

#include <cstdint>
#include <vector>

#include "edgecover/graph.h"
#include "edgecover/rational.h"

namespace edgecover {

// Integer-capacity directed network. Arcs are stored in pairs: arc a and arc
// a ^ 1 are each other's reverse.
class FlowNetwork {
 public:
  enum class NodeKind { kSource, kSink, kEdge, kVertex };

  static constexpr std::int32_t kSource = 0;
  static constexpr std::int32_t kSink = 1;

  struct Arc {
    std::int32_t from;
    std::int32_t to;
    std::int64_t capacity;
  };

  FlowNetwork()
      : kinds_{NodeKind::kSource, NodeKind::kSink}, labels_{-1, -1}, out_(2) {}

  // `label` is the graph edge index for kEdge nodes and the vertex id for
  // kVertex nodes.
  std::int32_t AddNode(NodeKind kind, std::int64_t label);
  // Adds arc from->to and its zero-capacity reverse; returns the forward id.
  std::int32_t AddArc(std::int32_t from, std::int32_t to,
                      std::int64_t capacity);

  std::int32_t num_nodes() const { return static_cast<std::int32_t>(kinds_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  NodeKind kind(std::int32_t node) const { return kinds_[node]; }
  std::int64_t label(std::int32_t node) const { return labels_[node]; }
  const std::vector<std::int32_t>& out_arcs(std::int32_t node) const {
    return out_[node];
  }
  // Capacity of the forward arc from->to, 0 when there is none.
  std::int64_t CapacityBetween(std::int32_t from, std::int32_t to) const;
  // First node with the given kind and label, or -1.
  std::int32_t FindNode(NodeKind kind, std::int64_t label) const;

  // The scale every capacity was multiplied by (rho's denominator).
  std::int64_t scale() const { return scale_; }
  void set_scale(std::int64_t scale) { scale_ = scale; }

 private:
  std::vector<NodeKind> kinds_;
  std::vector<std::int64_t> labels_;
  std::vector<Arc> arcs_;
  std::vector<std::vector<std::int32_t>> out_;
  std::int64_t scale_ = 1;
};

struct MinCutResult {
  std::int64_t value = 0;
  // Maximal source side: every node that cannot reach t in the residual
  // network after a maximum flow.
  std::vector<bool> source_side;
};

// Exact integer max flow by blocking flows on BFS level graphs (Dinic).
MinCutResult MinCut(const FlowNetwork& net);

// Builds the network for the given U and rho, with every capacity scaled by
// rho.den() so all of them are integers:
//   s -> v_e     capacity den         (one node per edge inside V \ U)
//   s -> a       capacity deg_U(a) * den
//   v_e -> p, q  capacity n^5 * den
//   p -> t       capacity rho.num() * deg(p)
// Vertices of V \ U with degree zero get no node. InputError when U = V or
// rho < 0; OverflowError when n^5 * den does not fit in 64 bits.
FlowNetwork BuildNetwork(const Graph& g, const VertexSet& u, const Rational& rho);

struct DensityResult {
  VertexSet w;
  Rational rho;
  // The cut that produced w, at rho (capacities scaled by its denominator).
  std::int64_t cut_value = 0;
  std::int64_t cut_scale = 1;
  std::int64_t edge_nodes = 0;         // |V_E'|
  std::int64_t edge_nodes_source = 0;  // |V_E'^s|
  int probes = 0;                      // min-cut calls made by the search
};

// Optimal W and its density, exact. NoCandidateError when every vertex of
// V \ U has degree zero; InputError when U = V.
DensityResult DensityAug(const Graph& g, const VertexSet& u);

// The optimal density alone.
Rational FindRhoStar(const Graph& g, const VertexSet& u);

// Nonempty W on the source side of the maximal minimum cut at rho, with the
// cut attached; w is empty exactly when rho exceeds the optimum.
DensityResult ProbeDensity(const Graph& g, const VertexSet& u,
                           const Rational& rho);

}  // namespace edgecover

#endif  // EDGECOVER_DENSITY_H_
