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

#include "edgecover/oracles.h"

#include <optional>
#include <string>
#include <vector>

#include "edgecover/error.h"

namespace edgecover {
namespace {

void CheckCap(std::int64_t size, int cap) {
  if (size > cap) {
    throw CapRefusalError("exhaustive search over " + std::to_string(size) +
                          " vertices refused (cap " + std::to_string(cap) +
                          ")");
  }
}

// Calls visit(subset) for every subset of `items`: sizes 0..k in order, each
// size in lexicographic order of positions.
template <typename Visit>
std::uint64_t ForEachSubset(const std::vector<VertexId>& items, Visit&& visit) {
  const int k_max = static_cast<int>(items.size());
  std::uint64_t count = 0;
  std::vector<VertexId> subset;
  for (int k = 0; k <= k_max; ++k) {
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[i] = i;
    while (true) {
      subset.clear();
      for (int p : pos) subset.push_back(items[p]);
      ++count;
      visit(subset);
      int i = k - 1;
      while (i >= 0 && pos[i] == k_max - k + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
  return count;
}

struct Counts {
  std::int64_t touched = 0;
  std::int64_t internal = 0;
  std::int64_t degree = 0;
  Weight weight = 0;
};

Counts Evaluate(const Graph& g, const std::vector<bool>& in) {
  Counts c;
  for (const Edge& e : g.edges()) {
    if (in[e.u] || in[e.v]) ++c.touched;
    if (in[e.u] && in[e.v]) ++c.internal;
    if (in[e.u]) ++c.degree;
    if (in[e.v]) ++c.degree;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) c.weight += g.weight(v);
  }
  return c;
}

std::vector<bool> MaskOf(VertexId n, const std::vector<VertexId>& subset) {
  std::vector<bool> in(n, false);
  for (VertexId v : subset) in[v] = true;
  return in;
}

// Shared driver for the integer objectives: `score` returns nullopt for an
// infeasible subset, otherwise a value where smaller is better.
template <typename Score>
OracleResult MinimizeOverSubsets(const Graph& g, Score&& score) {
  OracleResult result;
  std::optional<std::int64_t> best;
  const auto all = VertexSet::All(g.num_vertices()).members();
  result.enumerated = ForEachSubset(all, [&](const std::vector<VertexId>& s) {
    const auto value = score(Evaluate(g, MaskOf(g.num_vertices(), s)));
    if (value && (!best || *value < *best)) {
      best = value;
      result.witness = VertexSet(s);
    }
  });
  if (!best) throw InfeasibleError("no feasible subset");
  result.optimum = *best;
  return result;
}

}  // namespace

OracleResult BruteFcec(const Graph& g, Weight target, int cap) {
  CheckCap(g.num_vertices(), cap);
  if (target > g.total_weight()) {
    throw InfeasibleError("target weight exceeds total weight");
  }
  return MinimizeOverSubsets(g, [&](const Counts& c) -> std::optional<std::int64_t> {
    if (c.weight < target) return std::nullopt;
    return c.touched;
  });
}

OracleResult BruteMwec(const Graph& g, std::int64_t edge_budget, int cap) {
  CheckCap(g.num_vertices(), cap);
  OracleResult result = MinimizeOverSubsets(
      g, [&](const Counts& c) -> std::optional<std::int64_t> {
        if (c.touched > edge_budget) return std::nullopt;
        return -c.weight;
      });
  result.optimum = -result.value();
  return result;
}

OracleResult BruteMinDegKnapsack(const Graph& g, Weight target, int cap) {
  CheckCap(g.num_vertices(), cap);
  if (target > g.total_weight()) {
    throw InfeasibleError("target weight exceeds total weight");
  }
  return MinimizeOverSubsets(g, [&](const Counts& c) -> std::optional<std::int64_t> {
    if (c.weight < target) return std::nullopt;
    return c.degree;
  });
}

OracleResult BruteDensityAug(const Graph& g, const VertexSet& u, int cap) {
  const VertexId n = g.num_vertices();
  const auto in_u = u.Mask(n);
  const auto outside = u.Complement(n).members();
  CheckCap(static_cast<std::int64_t>(outside.size()), cap);

  OracleResult result;
  std::optional<Rational> best;
  result.enumerated =
      ForEachSubset(outside, [&](const std::vector<VertexId>& s) {
        const auto in_w = MaskOf(n, s);
        std::int64_t numerator = 0, degree = 0;
        for (const Edge& e : g.edges()) {
          if (in_w[e.u] && in_w[e.v]) ++numerator;
          if ((in_w[e.u] && in_u[e.v]) || (in_u[e.u] && in_w[e.v])) ++numerator;
          if (in_w[e.u]) ++degree;
          if (in_w[e.v]) ++degree;
        }
        if (degree == 0) return;
        const Rational value(numerator, degree);
        if (!best || value > *best) {
          best = value;
          result.witness = VertexSet(s);
        }
      });
  if (!best) throw NoCandidateError("no W outside U with positive degree");
  result.optimum = *best;
  return result;
}

}  // namespace edgecover
