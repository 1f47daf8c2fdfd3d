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

// Fixed cost minimum edge cover: pick vertices of total weight at least W so
// that as few edges as possible touch the chosen set.
//
// The solver minimizes deg(S) subject to w(S) >= W exactly with a 0/1
// knapsack over degree budgets. Since t(S) <= deg(S) and deg(S) <= 2 t(S) for
// every S, the minimizer of deg(S) touches at most twice the optimum.

#ifndef EDGECOVER_FCEC_H_
#define EDGECOVER_FCEC_H_

#include <cstdint>
#include <vector>

#include "edgecover/graph.h"

namespace edgecover {

struct FcecInstance {
  Graph graph;
  Weight target_weight = 0;
};

// P[i][D]: the largest weight of a subset of the first i vertices whose
// degree sum is at most D, for D in 0..deg(V).
//
// The i-th vertex of the ordering is id n - i. Counting from the top keeps the
// forward re-trace in increasing id order, which is what makes the returned
// set the lexicographically smallest among the optimal ones.
//
// Memory is (n + 1) * (2m + 1) entries; construction refuses tables above
// kMaxEntries with an InputError.
class DegreeKnapsackTable {
 public:
  static constexpr std::int64_t kMaxEntries = std::int64_t{1} << 28;

  explicit DegreeKnapsackTable(const Graph& g);

  std::int64_t max_budget() const { return max_budget_; }
  VertexId num_items() const { return n_; }
  VertexId VertexAt(VertexId i) const { return n_ - i; }  // i in 1..n
  Weight At(VertexId i, std::int64_t budget) const {
    return table_[static_cast<std::size_t>(i) * (max_budget_ + 1) + budget];
  }

  // Smallest D with P[n][D] >= target, or -1 when even deg(V) does not reach
  // the target weight.
  std::int64_t SmallestBudget(Weight target) const;
  // A set of weight >= target and degree sum <= budget, read back from the
  // table. Zero-weight vertices are never taken.
  VertexSet Trace(Weight target, std::int64_t budget) const;

 private:
  const Graph* graph_;
  VertexId n_;
  std::int64_t max_budget_;
  std::vector<Weight> table_;
};

// The k lowest-degree vertices, ties to the smaller id. Defined for uniform
// weights only (InputError otherwise) and 0 <= k <= n.
Solution KLowestDegree(const Graph& g, std::int64_t k);

// Exact minimizer of deg(S) subject to w(S) >= target. Throws
// InfeasibleError when target exceeds w(V).
Solution MinDegreeKnapsack(const FcecInstance& inst);

// MinDegreeKnapsack's set, reported with its audited touched count.
Solution FcecApprox(const FcecInstance& inst);

}  // namespace edgecover

#endif  // EDGECOVER_FCEC_H_
