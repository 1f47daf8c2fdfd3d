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

#include "edgecover/mwec.h"

#include <algorithm>
#include <string>

#include "edgecover/error.h"
#include "parallel.h"

namespace edgecover {
namespace {

// True when v may join a solution whose heaviest member is h.
bool LighterThan(const Graph& g, VertexId v, VertexId h) {
  if (g.weight(v) != g.weight(h)) return g.weight(v) < g.weight(h);
  return v < h;
}

}  // namespace

MwecGuessTable::MwecGuessTable(const Graph& g, std::int64_t edge_budget,
                               VertexId heaviest)
    : graph_(&g),
      edge_budget_(edge_budget),
      heaviest_(heaviest),
      max_d_(2 * g.num_edges()) {
  if (heaviest < 0 || heaviest >= g.num_vertices()) {
    throw InputError("guess vertex out of range");
  }
  if (edge_budget < 0) throw InputError("edge budget is negative");
  const std::int64_t rest_budget = edge_budget - g.degree(heaviest);
  feasible_ = rest_budget >= 0;
  if (!feasible_) return;
  stored_d_ = std::min(max_d_, 2 * rest_budget);

  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == heaviest || !LighterThan(g, v, heaviest)) continue;
    pool_.push_back(v);
    const std::int64_t adj = g.HasEdge(v, heaviest) ? 1 : 0;
    to_h_.push_back(adj);
    to_rest_.push_back(g.degree(v) - adj);
    max_p_ += adj;
  }

  const std::int64_t rows = static_cast<std::int64_t>(pool_.size()) + 1;
  const std::int64_t entries = rows * (max_p_ + 1) * (stored_d_ + 1);
  if (entries > kMaxEntries) {
    throw InputError("MWEC table of " + std::to_string(entries) +
                     " entries exceeds the supported size");
  }
  table_.assign(static_cast<std::size_t>(entries), kNegInf);
  for (std::int64_t d = 0; d <= stored_d_; ++d) table_[Index(0, 0, d)] = 0;

  for (std::int64_t i = 1; i < rows; ++i) {
    const Weight w = g.weight(pool_[i - 1]);
    const std::int64_t dp = to_h_[i - 1];
    const std::int64_t dd = 2 * to_rest_[i - 1];
    for (std::int64_t p = 0; p <= max_p_; ++p) {
      const std::int64_t prev_p = std::max<std::int64_t>(0, p - dp);
      for (std::int64_t d = 0; d <= stored_d_; ++d) {
        std::int64_t best = table_[Index(i - 1, p, d)];
        if (d - dd >= 0) {
          const std::int64_t with = table_[Index(i - 1, prev_p, d - dd)];
          if (with != kNegInf) best = std::max(best, with + w);
        }
        table_[Index(i, p, d)] = best;
      }
    }
  }
}

std::int64_t MwecGuessTable::At(std::int64_t i, std::int64_t p,
                                std::int64_t d) const {
  if (!feasible_ || d < 0) return kNegInf;
  if (d > 2 * (edge_budget_ - graph_->degree(heaviest_))) return kNegInf;
  if (i < 0 || i > static_cast<std::int64_t>(pool_.size())) {
    throw InputError("MWEC table row out of range");
  }
  p = std::max<std::int64_t>(p, 0);
  if (p > max_p_) return kNegInf;
  d = std::min(d, stored_d_);
  return table_[Index(i, p, d)];
}

std::optional<Solution> MwecGuessTable::Best() const {
  if (!feasible_) return std::nullopt;
  const std::int64_t r = static_cast<std::int64_t>(pool_.size());
  std::int64_t best = kNegInf, best_p = 0, best_d = 0;
  for (std::int64_t p = 0; p <= max_p_; ++p) {
    for (std::int64_t d = 0; d <= stored_d_; ++d) {
      const std::int64_t value = table_[Index(r, p, d)];
      if (value > best) {
        best = value;
        best_p = p;
        best_d = d;
      }
    }
  }
  // A[r][0][d] >= 0 for every stored d, so the maximum is always finite.
  std::vector<VertexId> chosen{heaviest_};
  std::int64_t p = best_p, d = best_d;
  for (std::int64_t i = r; i >= 1; --i) {
    if (table_[Index(i, p, d)] == table_[Index(i - 1, p, d)]) continue;
    chosen.push_back(pool_[i - 1]);
    p = std::max<std::int64_t>(0, p - to_h_[i - 1]);
    d -= 2 * to_rest_[i - 1];
  }
  Solution s = MakeSolution(*graph_, VertexSet(std::move(chosen)));
  if (s.weight != graph_->weight(heaviest_) + best) {
    throw InternalError("MWEC trace disagrees with table value");
  }
  return s;
}

std::optional<Solution> MwecDpForGuess(const MwecInstance& inst, VertexId h) {
  return MwecGuessTable(inst.graph, inst.edge_budget, h).Best();
}

Solution MwecDp(const MwecInstance& inst, const MwecOptions& options) {
  const Graph& g = inst.graph;
  if (inst.edge_budget < 0) throw InputError("edge budget is negative");
  const VertexId n = g.num_vertices();
  std::vector<std::optional<Solution>> per_guess(n);
  ParallelFor(n, options.threads, [&](std::int64_t h) {
    per_guess[h] = MwecDpForGuess(inst, static_cast<VertexId>(h));
  });

  Solution best = MakeSolution(g, VertexSet());
  for (auto& candidate : per_guess) {
    if (candidate && candidate->weight > best.weight) best = *candidate;
  }
  if (!MwecFeasibilityAudit(g, best.set, inst.edge_budget)) {
    throw InternalError("MWEC result touches more than the edge budget");
  }
  return best;
}

bool MwecFeasibilityAudit(const Graph& g, const VertexSet& u,
                          std::int64_t edge_budget) {
  return Touched(g, u) <= edge_budget;
}

}  // namespace edgecover
