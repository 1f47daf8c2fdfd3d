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

#include "edgecover/density.h"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "edgecover/error.h"

namespace edgecover {
namespace {

std::int64_t CheckedMul(std::int64_t a, std::int64_t b, const char* what) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError(std::string(what) + " exceeds 64-bit range");
  }
  return out;
}

class Dinic {
 public:
  explicit Dinic(const FlowNetwork& net)
      : net_(net),
        residual_(net.arcs().size()),
        level_(net.num_nodes()),
        next_arc_(net.num_nodes()) {
    for (std::size_t a = 0; a < residual_.size(); ++a) {
      residual_[a] = net.arcs()[a].capacity;
    }
  }

  std::int64_t Run() {
    std::int64_t flow = 0;
    while (BuildLevels()) {
      std::fill(next_arc_.begin(), next_arc_.end(), 0);
      while (std::int64_t pushed =
                 Push(FlowNetwork::kSource,
                      std::numeric_limits<std::int64_t>::max())) {
        flow += pushed;
      }
    }
    return flow;
  }

  // Nodes that cannot reach the sink through arcs with spare capacity.
  std::vector<bool> MaximalSourceSide() const {
    std::vector<bool> reaches_sink(net_.num_nodes(), false);
    std::queue<std::int32_t> queue;
    reaches_sink[FlowNetwork::kSink] = true;
    queue.push(FlowNetwork::kSink);
    while (!queue.empty()) {
      const std::int32_t v = queue.front();
      queue.pop();
      for (std::int32_t a : net_.out_arcs(v)) {
        // Arc a ^ 1 runs from arcs()[a].to into v.
        const std::int32_t u = net_.arcs()[a].to;
        if (!reaches_sink[u] && residual_[a ^ 1] > 0) {
          reaches_sink[u] = true;
          queue.push(u);
        }
      }
    }
    std::vector<bool> source_side(net_.num_nodes());
    for (std::int32_t v = 0; v < net_.num_nodes(); ++v) {
      source_side[v] = !reaches_sink[v];
    }
    return source_side;
  }

 private:
  bool BuildLevels() {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::int32_t> queue;
    level_[FlowNetwork::kSource] = 0;
    queue.push(FlowNetwork::kSource);
    while (!queue.empty()) {
      const std::int32_t v = queue.front();
      queue.pop();
      for (std::int32_t a : net_.out_arcs(v)) {
        const std::int32_t to = net_.arcs()[a].to;
        if (residual_[a] > 0 && level_[to] < 0) {
          level_[to] = level_[v] + 1;
          queue.push(to);
        }
      }
    }
    return level_[FlowNetwork::kSink] >= 0;
  }

  std::int64_t Push(std::int32_t v, std::int64_t limit) {
    if (v == FlowNetwork::kSink) return limit;
    const auto& out = net_.out_arcs(v);
    for (auto& i = next_arc_[v]; i < out.size(); ++i) {
      const std::int32_t a = out[i];
      const std::int32_t to = net_.arcs()[a].to;
      if (residual_[a] <= 0 || level_[to] != level_[v] + 1) continue;
      const std::int64_t pushed = Push(to, std::min(limit, residual_[a]));
      if (pushed > 0) {
        residual_[a] -= pushed;
        residual_[a ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  const FlowNetwork& net_;
  std::vector<std::int64_t> residual_;
  std::vector<std::int32_t> level_;
  std::vector<std::size_t> next_arc_;
};

// (e(W) + e(U, W)) / deg(W) for nonempty W of positive degree.
Rational Density(const Graph& g, const VertexSet& u, const VertexSet& w) {
  return Rational(InternalEdges(g, w) + CrossEdges(g, u, w), DegSum(g, w));
}

// deg of V \ U, restricted to vertices that can appear in W at all.
std::int64_t CandidateDegree(const Graph& g, const VertexSet& u) {
  const auto in_u = u.Mask(g.num_vertices());
  bool outside = false;
  std::int64_t total = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in_u[v]) continue;
    outside = true;
    total += g.degree(v);
  }
  if (!outside) throw InputError("U covers every vertex; no candidates for W");
  if (total == 0) {
    throw NoCandidateError("every vertex outside U has degree zero");
  }
  return total;
}

}  // namespace

std::int32_t FlowNetwork::AddNode(NodeKind kind, std::int64_t label) {
  kinds_.push_back(kind);
  labels_.push_back(label);
  out_.emplace_back();
  return num_nodes() - 1;
}

std::int32_t FlowNetwork::AddArc(std::int32_t from, std::int32_t to,
                                 std::int64_t capacity) {
  if (capacity < 0) throw InputError("negative arc capacity");
  if (from < 0 || from >= num_nodes() || to < 0 || to >= num_nodes()) {
    throw InputError("arc endpoint is not a node");
  }
  const auto id = static_cast<std::int32_t>(arcs_.size());
  arcs_.push_back({from, to, capacity});
  arcs_.push_back({to, from, 0});
  out_[from].push_back(id);
  out_[to].push_back(id + 1);
  return id;
}

std::int64_t FlowNetwork::CapacityBetween(std::int32_t from,
                                          std::int32_t to) const {
  for (std::size_t a = 0; a < arcs_.size(); a += 2) {
    if (arcs_[a].from == from && arcs_[a].to == to) return arcs_[a].capacity;
  }
  return 0;
}

std::int32_t FlowNetwork::FindNode(NodeKind kind, std::int64_t label) const {
  for (std::int32_t v = 0; v < num_nodes(); ++v) {
    if (kinds_[v] == kind && labels_[v] == label) return v;
  }
  return -1;
}

MinCutResult MinCut(const FlowNetwork& net) {
  Dinic dinic(net);
  MinCutResult result;
  result.value = dinic.Run();
  result.source_side = dinic.MaximalSourceSide();
  return result;
}

FlowNetwork BuildNetwork(const Graph& g, const VertexSet& u,
                         const Rational& rho) {
  const VertexId n = g.num_vertices();
  const auto in_u = u.Mask(n);
  if (static_cast<VertexId>(u.size()) == n) {
    throw InputError("U covers every vertex; no candidates for W");
  }
  if (rho < Rational(0)) throw InputError("rho must be nonnegative");

  const std::int64_t den = rho.den();
  std::int64_t big = 1;
  for (int i = 0; i < 5; ++i) big = CheckedMul(big, n, "n^5");
  big = CheckedMul(big, den, "n^5 * den");

  FlowNetwork net;
  net.set_scale(den);
  std::vector<std::int32_t> node_of(n, -1);
  const auto& edges = g.edges();
  std::vector<std::int32_t> edge_nodes;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!in_u[edges[i].u] && !in_u[edges[i].v]) {
      edge_nodes.push_back(static_cast<std::int32_t>(i));
    }
  }
  std::vector<std::int32_t> edge_node_ids;
  for (std::int32_t e : edge_nodes) {
    edge_node_ids.push_back(net.AddNode(FlowNetwork::NodeKind::kEdge, e));
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!in_u[v] && g.degree(v) > 0) {
      node_of[v] = net.AddNode(FlowNetwork::NodeKind::kVertex, v);
    }
  }

  for (std::size_t k = 0; k < edge_nodes.size(); ++k) {
    const Edge& e = edges[edge_nodes[k]];
    net.AddArc(FlowNetwork::kSource, edge_node_ids[k], den);
    net.AddArc(edge_node_ids[k], node_of[e.u], big);
    net.AddArc(edge_node_ids[k], node_of[e.v], big);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (node_of[v] < 0) continue;
    std::int64_t to_u = 0;
    for (VertexId x : g.neighbors(v)) to_u += in_u[x] ? 1 : 0;
    net.AddArc(FlowNetwork::kSource, node_of[v],
               CheckedMul(to_u, den, "source capacity"));
    net.AddArc(node_of[v], FlowNetwork::kSink,
               CheckedMul(rho.num(), g.degree(v), "sink capacity"));
  }
  return net;
}

DensityResult ProbeDensity(const Graph& g, const VertexSet& u,
                           const Rational& rho) {
  const FlowNetwork net = BuildNetwork(g, u, rho);
  const MinCutResult cut = MinCut(net);
  DensityResult result;
  std::vector<VertexId> w;
  for (std::int32_t v = 2; v < net.num_nodes(); ++v) {
    if (net.kind(v) == FlowNetwork::NodeKind::kEdge) {
      ++result.edge_nodes;
      if (cut.source_side[v]) ++result.edge_nodes_source;
    } else if (cut.source_side[v]) {
      w.push_back(static_cast<VertexId>(net.label(v)));
    }
  }
  result.w = VertexSet(std::move(w));
  result.rho = rho;
  result.cut_value = cut.value;
  result.cut_scale = net.scale();
  result.probes = 1;
  return result;
}

DensityResult DensityAug(const Graph& g, const VertexSet& u) {
  const std::int64_t max_deg = CandidateDegree(g, u);

  // Candidate densities are fractions with denominator at most max_deg, so
  // two distinct ones differ by at least 1 / max_deg^2. Every density is at
  // most 1, which makes 2 a safe infeasible upper bound.
  const Rational resolution(1, CheckedMul(max_deg, max_deg, "resolution"));
  Rational lo(0), hi(2);
  int probes = 0;
  while (hi - lo >= resolution) {
    const Rational mid = (lo + hi) / Rational(2);
    ++probes;
    if (ProbeDensity(g, u, mid).w.empty()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }

  const Rational rho_star = SimplestInInterval(lo, hi);
  DensityResult result = ProbeDensity(g, u, rho_star);
  result.probes = probes + 1;
  if (result.w.empty() || Density(g, u, result.w) != rho_star) {
    throw InternalError("density search did not land on an optimal set");
  }
  return result;
}

Rational FindRhoStar(const Graph& g, const VertexSet& u) {
  return DensityAug(g, u).rho;
}

}  // namespace edgecover
