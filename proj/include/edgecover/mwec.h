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

// Maximum weight m'-edge cover: pick a heaviest set of vertices touched by at
// most m' edges. Two-approximation by guessing the heaviest chosen vertex h
// and running a dynamic program over the lighter vertices.

#ifndef EDGECOVER_MWEC_H_
#define EDGECOVER_MWEC_H_

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "edgecover/graph.h"

namespace edgecover {

struct MwecInstance {
  Graph graph;
  std::int64_t edge_budget = 0;
};

// Dynamic program for one guess H = {h} of the heaviest vertex.
//
// The candidate pool for Q holds the vertices lighter than h, where equal
// weights are ordered by id (v precedes h when w(v) == w(h) and v < h). With
// pool vertices v_1..v_r in increasing id order, entry A[i][P][D] is the
// largest weight of Q within {v_1..v_i} such that e(H, Q) >= P and
// deg_{V-H}(Q) <= D/2, or kNegInf. P runs over 0..(pool neighbours of h) and
// D over 0..2m; every D with D/2 > m' - deg(h) is infeasible.
class MwecGuessTable {
 public:
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kMaxEntries = std::int64_t{1} << 27;

  MwecGuessTable(const Graph& g, std::int64_t edge_budget, VertexId heaviest);

  // False when h alone already touches more than m' edges.
  bool feasible() const { return feasible_; }
  VertexId heaviest() const { return heaviest_; }
  const std::vector<VertexId>& pool() const { return pool_; }
  std::int64_t max_p() const { return max_p_; }
  std::int64_t max_d() const { return max_d_; }

  // Any integers are accepted; out-of-table arguments follow the base cases.
  std::int64_t At(std::int64_t i, std::int64_t p, std::int64_t d) const;

  // {h} plus the best Q over all (P, D); nullopt when infeasible.
  std::optional<Solution> Best() const;

 private:
  std::size_t Index(std::int64_t i, std::int64_t p, std::int64_t d) const {
    return (static_cast<std::size_t>(i) * (max_p_ + 1) + p) * (stored_d_ + 1) +
           d;
  }

  const Graph* graph_;
  std::int64_t edge_budget_;
  VertexId heaviest_;
  bool feasible_ = false;
  std::vector<VertexId> pool_;
  std::vector<std::int64_t> to_h_;     // deg_H(v_i), 0 or 1
  std::vector<std::int64_t> to_rest_;  // deg_{V-H}(v_i)
  std::int64_t max_p_ = 0;
  std::int64_t max_d_ = 0;     // 2m
  std::int64_t stored_d_ = 0;  // min(2m, 2(m' - deg(h)))
  std::vector<std::int64_t> table_;
};

struct MwecOptions {
  int threads = 1;
};

// Best of the empty set and every feasible guess; ties go to the earliest
// guess in id order. The result always satisfies touched <= m' (checked, an
// InternalError otherwise).
Solution MwecDp(const MwecInstance& inst, const MwecOptions& options = {});

// The dynamic program with the heaviest vertex pinned to h.
std::optional<Solution> MwecDpForGuess(const MwecInstance& inst, VertexId h);

bool MwecFeasibilityAudit(const Graph& g, const VertexSet& u,
                          std::int64_t edge_budget);

}  // namespace edgecover

#endif  // EDGECOVER_MWEC_H_
