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

// Exhaustive solvers used as ground truth on small instances. They enumerate
// every subset by increasing size and then lexicographically, evaluate the
// objective by a plain scan of the edge list, and keep the first optimum
// found. Instances above the cap are refused with CapRefusalError.

#ifndef EDGECOVER_ORACLES_H_
#define EDGECOVER_ORACLES_H_

#include <cstdint>
#include <variant>

#include "edgecover/graph.h"
#include "edgecover/rational.h"

namespace edgecover {

inline constexpr int kDefaultOracleCap = 14;

struct OracleResult {
  std::variant<std::int64_t, Rational> optimum;
  VertexSet witness;
  std::uint64_t enumerated = 0;

  std::int64_t value() const { return std::get<std::int64_t>(optimum); }
  const Rational& ratio() const { return std::get<Rational>(optimum); }
};

// min t(S) over w(S) >= target. InfeasibleError when target > w(V).
OracleResult BruteFcec(const Graph& g, Weight target,
                       int cap = kDefaultOracleCap);
// max w(S) over t(S) <= edge_budget.
OracleResult BruteMwec(const Graph& g, std::int64_t edge_budget,
                       int cap = kDefaultOracleCap);
// max (e(W) + e(U,W)) / deg(W) over nonempty W in V \ U with deg(W) > 0.
// The cap applies to |V \ U|. NoCandidateError when no such W exists.
OracleResult BruteDensityAug(const Graph& g, const VertexSet& u,
                             int cap = kDefaultOracleCap);
// min deg(S) over w(S) >= target.
OracleResult BruteMinDegKnapsack(const Graph& g, Weight target,
                                 int cap = kDefaultOracleCap);

}  // namespace edgecover

#endif  // EDGECOVER_ORACLES_H_
