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

#include "edgecover/reductions.h"

#include <algorithm>
#include <limits>
#include <random>
#include <string>

#include "edgecover/error.h"
#include "edgecover/fcec.h"
#include "parallel.h"

namespace edgecover {
namespace {

using Wide = __int128;

std::vector<Weight> GuessTargets(const RescaledInstance& inst) {
  const Graph& g = inst.graph;
  const Weight total = g.total_weight();
  std::vector<Weight> targets;
  if (total <= kMaxExactGuessTotal) {
    std::vector<char> reachable(static_cast<std::size_t>(total) + 1, 0);
    reachable[0] = 1;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      const Weight w = g.weight(v);
      if (w == 0) continue;
      for (Weight s = total; s >= w; --s) {
        if (reachable[s - w]) reachable[s] = 1;
      }
    }
    for (Weight s = 1; s <= total; ++s) {
      if (reachable[s]) targets.push_back(s);
    }
    return targets;
  }
  const Weight n = g.num_vertices();
  for (Weight t = 1; t < total;) {
    targets.push_back(t);
    const Wide next = static_cast<Wide>(t) * (n + 1) / n;
    t = std::max<Weight>(t + 1, static_cast<Weight>(std::min<Wide>(next, total)));
  }
  targets.push_back(total);
  return targets;
}

struct GuessOutcome {
  std::optional<Solution> best;  // by original weight, touched <= m'
  bool good = false;             // a sample avoided both bad events
};

}  // namespace

VertexSet RescaledInstance::Restrict(const VertexSet& s) const {
  std::vector<VertexId> out;
  for (VertexId v : s) {
    if (v >= 0 && v < static_cast<VertexId>(kept.size()) && kept[v]) {
      out.push_back(v);
    }
  }
  return VertexSet(std::move(out));
}

RescaledInstance RescaleWeights(const Graph& g, std::int64_t edge_budget) {
  const VertexId n = g.num_vertices();
  const auto& w = g.weights();
  Weight heaviest = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) <= edge_budget) heaviest = std::max(heaviest, w[v]);
  }
  if (heaviest == 0) {
    throw InputError("rescaling needs a positive weight within the budget");
  }
  const Wide n2 = static_cast<Wide>(n) * n;

  RescaledInstance out{g, std::vector<bool>(n, false), -1, w};
  for (VertexId v = 0; v < n; ++v) {
    out.kept[v] = g.degree(v) <= edge_budget &&
                  static_cast<Wide>(w[v]) * n2 >= heaviest;
    // Lightest survivor; among equals the one that sorts last by id.
    if (out.kept[v] && (out.pivot < 0 || w[v] <= w[out.pivot])) out.pivot = v;
  }
  std::vector<Weight> scaled(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    if (!out.kept[v]) continue;
    const Wide value = static_cast<Wide>(w[v]) * n2 / w[out.pivot];
    if (value > std::numeric_limits<Weight>::max()) {
      throw OverflowError("rescaled weight exceeds 64-bit range");
    }
    scaled[v] = static_cast<Weight>(value);
  }
  out.graph = g.WithWeights(std::move(scaled));
  return out;
}

ReductionResult MwecViaFcec(const Graph& g, std::int64_t edge_budget,
                            const FcecSolver& fcec,
                            const ReductionOptions& options) {
  if (edge_budget < 0) throw InputError("edge budget is negative");
  if (options.alpha < Rational(1)) throw InputError("alpha must be >= 1");
  if (options.tau <= Rational(0)) throw InputError("tau must be positive");
  if (options.retries < 1) throw InputError("retries must be >= 1");

  ReductionResult result;
  result.solution = MakeSolution(g, VertexSet());
  bool any = false;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    any = any || (g.weight(v) > 0 && g.degree(v) <= edge_budget);
  }
  // Every feasible set then has weight 0, so the empty set is optimal.
  if (!any) return result;
  result.warning = true;

  const RescaledInstance inst = RescaleWeights(g, edge_budget);
  const Graph& scaled = inst.graph;
  const std::vector<Weight> targets = GuessTargets(inst);
  result.guesses = static_cast<std::int64_t>(targets.size());
  // Bad event (i) is w'(B) <= W / ((1 + tau) alpha).
  const Rational shrink = (Rational(1) + options.tau) * options.alpha;
  const Rational& alpha = options.alpha;

  std::vector<GuessOutcome> outcomes(targets.size());
  ParallelFor(result.guesses, options.threads, [&](std::int64_t index) {
    const Weight target = targets[index];
    GuessOutcome& out = outcomes[index];
    auto consider = [&](VertexSet b) -> bool {
      Solution s = MakeSolution(g, b);
      if (s.touched > edge_budget) return false;
      if (!out.best || s.weight > out.best->weight) out.best = std::move(s);
      return Rational(WeightOf(scaled, b)) * shrink > Rational(target);
    };

    const VertexSet u = inst.Restrict(fcec(scaled, target));
    // A feasible U needs no thinning.
    if (consider(u)) {
      out.good = true;
      return;
    }
    std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                      static_cast<std::uint32_t>(options.seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_int_distribution<std::int64_t> coin(0, alpha.num() - 1);
    std::vector<VertexId> kept;
    for (int round = 0; round < options.retries; ++round) {
      kept.clear();
      for (VertexId v : u) {
        if (coin(rng) < alpha.den()) kept.push_back(v);
      }
      if (consider(VertexSet(kept))) {
        out.good = true;
        return;
      }
    }
  });

  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (outcomes[i].good) result.warning = false;
    const auto& best = outcomes[i].best;
    if (best && best->weight > result.solution.weight) {
      result.solution = *best;
      result.best_guess = targets[i];
    }
  }
  if (result.solution.touched > edge_budget) {
    throw InternalError("reduction produced an infeasible set");
  }
  return result;
}

GapReport EvaluateGap(const Graph& g, std::int64_t k, std::uint64_t seed) {
  if (k < 1) throw InputError("gap measurement needs k >= 1");
  GapReport report;
  report.n = g.num_vertices();
  report.k = k;
  report.seed = seed;
  report.m = g.num_edges();
  report.lp_value = Rational(report.m, k);
  report.integral_value = KLowestDegree(g, k).touched;
  if (report.m > 0) report.ratio = Rational(report.integral_value * k, report.m);
  return report;
}

GapReport GapExperiment(std::int64_t n, std::uint64_t seed) {
  if (n < 16) throw InputError("gap experiment needs n >= 16");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw InputError("gap experiment n too large");
  }
  std::int64_t k = 1;
  while ((k + 1) * (k + 1) <= n) ++k;
  const Graph g = GenerateGnp(static_cast<VertexId>(n), Rational(1, k), seed);
  return EvaluateGap(g, k, seed);
}

}  // namespace edgecover
