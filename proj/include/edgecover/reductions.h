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

#ifndef EDGECOVER_REDUCTIONS_H_
#define EDGECOVER_REDUCTIONS_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "edgecover/graph.h"
#include "edgecover/rational.h"

namespace edgecover {

// Weight truncation and rescaling for MWEC.
//
// Vertices of degree above the edge budget can never be chosen and are
// dropped first. With v_1 the heaviest remaining vertex, every v with
// w(v) < w(v_1) / n^2 is dropped as well; the lightest survivor v_p becomes
// the pivot and each survivor gets w'(v) = floor(w(v) / w(v_p) * n^2), which
// lies in [n^2, n^4].
//
// `graph` keeps the full vertex set and edge list so that touched counts are
// the same as in the input; dropped vertices carry weight 0 there and are
// listed in `kept` as false.
struct RescaledInstance {
  Graph graph;
  std::vector<bool> kept;
  VertexId pivot = 0;
  std::vector<Weight> original_weights;

  // Members of s that survived the truncation.
  VertexSet Restrict(const VertexSet& s) const;
};

inline constexpr std::int64_t kNoEdgeBudget =
    std::numeric_limits<std::int64_t>::max();

// InputError when no vertex of degree <= edge_budget has positive weight.
RescaledInstance RescaleWeights(const Graph& g,
                                std::int64_t edge_budget = kNoEdgeBudget);

// A solver for fixed cost minimum edge cover: given a graph and a target
// weight, return a set of at least that weight.
using FcecSolver = std::function<VertexSet(const Graph&, Weight)>;

struct ReductionOptions {
  Rational alpha = Rational(2);   // approximation factor of the FCEC solver
  Rational tau = Rational(1, 2);  // slack in the weight bad event
  int retries = 64;               // sampling rounds per guess
  std::uint64_t seed = 1;
  int threads = 1;
};

struct ReductionResult {
  Solution solution;
  // True when no guess produced a sample that avoided both bad events.
  bool warning = false;
  // Rescaled target of the guess that produced `solution` (0 for the empty
  // fallback).
  Weight best_guess = 0;
  std::int64_t guesses = 0;
};

// MWEC through an FCEC solver: rescale, then for every guessed optimum W of
// the rescaled instance take U = fcec(W) and keep each member of U with
// probability 1/alpha, retrying up to `retries` times. The best sample with
// t(B) <= m' by original weight wins; the empty set is the fallback.
//
// Guesses are the distinct nonzero subset sums of the rescaled weights when
// their total is at most kMaxExactGuessTotal, and otherwise a geometric grid
// with ratio 1 + 1/n topped by the total.
ReductionResult MwecViaFcec(const Graph& g, std::int64_t edge_budget,
                            const FcecSolver& fcec,
                            const ReductionOptions& options = {});

inline constexpr Weight kMaxExactGuessTotal = Weight{1} << 24;

// LP versus integral cost on G(n, 1/floor(sqrt n)) with k = floor(sqrt n).
// The fractional point x_v = y_e = 1/k costs m/k; the integral side is the
// touched count of the k lowest-degree vertices.
struct GapReport {
  std::int64_t n = 0;
  std::int64_t k = 0;
  std::uint64_t seed = 0;
  std::int64_t m = 0;
  Rational lp_value;
  std::int64_t integral_value = 0;
  // integral_value / lp_value; empty when m = 0.
  std::optional<Rational> ratio;
};

// n >= 16, otherwise InputError.
GapReport GapExperiment(std::int64_t n, std::uint64_t seed);
// The measurement alone, on a caller-supplied uniform-weight graph.
GapReport EvaluateGap(const Graph& g, std::int64_t k, std::uint64_t seed);

}  // namespace edgecover

#endif  // EDGECOVER_REDUCTIONS_H_
