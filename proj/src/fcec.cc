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

#include "edgecover/fcec.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "edgecover/error.h"

namespace edgecover {

DegreeKnapsackTable::DegreeKnapsackTable(const Graph& g)
    : graph_(&g), n_(g.num_vertices()), max_budget_(2 * g.num_edges()) {
  const std::int64_t entries = (static_cast<std::int64_t>(n_) + 1) *
                               (max_budget_ + 1);
  if (entries > kMaxEntries) {
    throw InputError("knapsack table of " + std::to_string(entries) +
                     " entries exceeds the supported size");
  }
  table_.assign(static_cast<std::size_t>(entries), 0);
  const std::size_t row = static_cast<std::size_t>(max_budget_ + 1);
  for (VertexId i = 1; i <= n_; ++i) {
    const VertexId v = VertexAt(i);
    const std::int64_t d = g.degree(v);
    const Weight w = g.weight(v);
    const Weight* prev = &table_[(i - 1) * row];
    Weight* cur = &table_[i * row];
    for (std::int64_t budget = 0; budget <= max_budget_; ++budget) {
      Weight best = prev[budget];
      if (budget >= d) best = std::max(best, w + prev[budget - d]);
      cur[budget] = best;
    }
  }
}

std::int64_t DegreeKnapsackTable::SmallestBudget(Weight target) const {
  for (std::int64_t budget = 0; budget <= max_budget_; ++budget) {
    if (At(n_, budget) >= target) return budget;
  }
  return -1;
}

VertexSet DegreeKnapsackTable::Trace(Weight target, std::int64_t budget) const {
  std::vector<VertexId> picked;
  Weight need = target;
  for (VertexId i = n_; i >= 1 && need > 0; --i) {
    const VertexId v = VertexAt(i);
    const std::int64_t d = graph_->degree(v);
    const Weight w = graph_->weight(v);
    if (w > 0 && d <= budget && w + At(i - 1, budget - d) >= need) {
      picked.push_back(v);
      need -= w;
      budget -= d;
    }
  }
  if (need > 0) throw InternalError("knapsack trace did not reach the target");
  return VertexSet(std::move(picked));
}

Solution KLowestDegree(const Graph& g, std::int64_t k) {
  if (!g.HasUniformWeights()) {
    throw InputError("k lowest-degree shortcut needs uniform weights");
  }
  if (k < 0 || k > g.num_vertices()) {
    throw InputError("k must lie in [0, n]");
  }
  std::vector<VertexId> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) < g.degree(b);
  });
  order.resize(static_cast<std::size_t>(k));
  return MakeSolution(g, VertexSet(std::move(order)));
}

Solution MinDegreeKnapsack(const FcecInstance& inst) {
  const Graph& g = inst.graph;
  if (inst.target_weight < 0) throw InputError("target weight is negative");
  if (inst.target_weight > g.total_weight()) {
    throw InfeasibleError("target weight " +
                          std::to_string(inst.target_weight) +
                          " exceeds total weight " +
                          std::to_string(g.total_weight()));
  }
  if (inst.target_weight == 0) return MakeSolution(g, VertexSet());
  const DegreeKnapsackTable table(g);
  const std::int64_t budget = table.SmallestBudget(inst.target_weight);
  if (budget < 0) throw InternalError("feasible target not reached by table");
  return MakeSolution(g, table.Trace(inst.target_weight, budget));
}

Solution FcecApprox(const FcecInstance& inst) {
  return MinDegreeKnapsack(inst);
}

}  // namespace edgecover
