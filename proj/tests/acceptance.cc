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


// Acceptance gate: one PASS or FAIL line per criterion, exit status 1 when
// any criterion fails. Corpus sizes and time limits are fixed here.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "edgecover/density.h"
#include "edgecover/error.h"
#include "edgecover/fcec.h"
#include "edgecover/graph.h"
#include "edgecover/mwec.h"
#include "edgecover/oracles.h"
#include "edgecover/rational.h"
#include "edgecover/reductions.h"
#include "test_util.h"

namespace edgecover {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), format, args...);
  return buf;
}

// Random instances with n in [1, max_n] and weights in [1, max_weight], plus
// the fixed instances given.
std::vector<Graph> Corpus(std::uint64_t seed, int count, VertexId max_n,
                          Weight max_weight, std::vector<Graph> fixed = {}) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out = std::move(fixed);
  while (static_cast<int>(out.size()) < count) {
    const VertexId n = 1 + static_cast<VertexId>(out.size() % max_n);
    out.push_back(testing::RandomGraph(rng, n, max_weight));
  }
  return out;
}

// ---- 1 ---------------------------------------------------------------------

Outcome TouchingIdentity() {
  std::mt19937_64 rng(1001);
  int mismatches = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const VertexId n = 1 + trial % 30;
    const Graph g = testing::RandomGraph(rng, n, 1);
    const VertexSet u = testing::RandomSubset(rng, n);
    const auto in = u.Mask(n);
    std::int64_t direct = 0;
    for (const Edge& e : g.edges()) direct += (in[e.u] || in[e.v]) ? 1 : 0;
    const std::int64_t identity = DegSum(g, u) - InternalEdges(g, u);
    if (direct != identity || Touched(g, u) != identity) ++mismatches;
  }
  return {mismatches == 0, Fmt("1000 pairs, n in 1..30, %d mismatches", mismatches)};
}

// ---- 2 and 3 ---------------------------------------------------------------

std::vector<Graph> KnapsackCorpus() {
  return Corpus(2002, 500, 10, 4, {testing::TwoDisjointEdges()});
}

Outcome KnapsackExactness() {
  int instances = 0, checks = 0, mismatches = 0;
  for (const Graph& g : KnapsackCorpus()) {
    ++instances;
    for (Weight target = 0; target <= g.total_weight(); ++target) {
      ++checks;
      const Solution s = MinDegreeKnapsack({g, target});
      if (s.weight < target ||
          DegSum(g, s.set) != BruteMinDegKnapsack(g, target).value()) {
        ++mismatches;
      }
    }
  }
  return {mismatches == 0, Fmt("%d instances n<=10, %d (instance, W) pairs, "
                               "%d mismatches",
                               instances, checks, mismatches)};
}

Outcome FcecRatio() {
  int checks = 0, violations = 0;
  Rational worst(0);
  for (const Graph& g : KnapsackCorpus()) {
    for (Weight target = 0; target <= g.total_weight(); ++target) {
      ++checks;
      const Solution s = FcecApprox({g, target});
      const std::int64_t opt = BruteFcec(g, target).value();
      if (s.weight < target || s.touched > 2 * opt) ++violations;
      if (opt > 0 && Rational(s.touched, opt) > worst) worst = Rational(s.touched, opt);
    }
  }
  const bool witnessed = worst > Rational(3, 2);
  return {violations == 0 && witnessed,
          Fmt("%d pairs, %d violations, max ratio %s (need > 3/2)", checks,
              violations, worst.ToString().c_str())};
}

// ---- 4 ---------------------------------------------------------------------

Outcome UniformShortcut() {
  int checks = 0, violations = 0;
  for (const Graph& g : Corpus(4004, 500, 10, 1)) {
    for (std::int64_t k = 0; k <= g.num_vertices(); ++k) {
      ++checks;
      if (KLowestDegree(g, k).touched > 2 * BruteFcec(g, k).value()) ++violations;
    }
  }
  return {violations == 0,
          Fmt("500 uniform instances n<=10, %d (instance, k) pairs, %d violations",
              checks, violations)};
}

// ---- 5 ---------------------------------------------------------------------

Outcome MwecHalfOptimal() {
  int checks = 0, infeasible = 0, short_weight = 0;
  for (const Graph& g : Corpus(5005, 500, 10, 8)) {
    for (std::int64_t budget = 0; budget <= g.num_edges(); ++budget) {
      ++checks;
      const Solution s = MwecDp({g, budget});
      if (Touched(g, s.set) > budget) ++infeasible;
      if (2 * s.weight < BruteMwec(g, budget).value()) ++short_weight;
    }
  }
  return {infeasible == 0 && short_weight == 0,
          Fmt("500 instances n<=10 w in [1,8], %d (instance, m') pairs, "
              "%d infeasible, %d below OPT/2",
              checks, infeasible, short_weight)};
}

// ---- 6 ---------------------------------------------------------------------

Outcome DensityExactness() {
  std::mt19937_64 rng(6006);
  int checks = 0, rho_mismatch = 0, cut_mismatch = 0, no_candidate = 0;
  while (checks < 200) {
    const VertexId n = 2 + static_cast<VertexId>(rng() % 19);  // 2..20
    const Graph g = testing::RandomGraph(rng, n, 1);
    // Keep |V \ U| between 1 and 14.
    std::vector<VertexId> perm(n);
    for (VertexId v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    const VertexId outside = 1 + static_cast<VertexId>(rng() % std::min(n, 14));
    const VertexSet u(std::vector<VertexId>(perm.begin() + outside, perm.end()));
    OracleResult oracle;
    try {
      oracle = BruteDensityAug(g, u);
    } catch (const NoCandidateError&) {
      ++no_candidate;
      continue;
    }
    ++checks;
    const DensityResult r = DensityAug(g, u);
    if (r.rho != oracle.ratio()) ++rho_mismatch;
    if (r.edge_nodes_source != InternalEdges(g, r.w)) ++cut_mismatch;
  }
  return {rho_mismatch == 0 && cut_mismatch == 0,
          Fmt("%d (g, U) pairs |V\\U|<=14, %d rho mismatches, %d cut-structure "
              "mismatches (%d degenerate draws skipped)",
              checks, rho_mismatch, cut_mismatch, no_candidate)};
}

// ---- 7 ---------------------------------------------------------------------

Outcome IntegralityGap() {
  const GapReport big = GapExperiment(4096, 1);
  const double ratio = big.ratio->ToDouble();
  const bool bracket = ratio >= 1.4 && ratio <= 2.0;
  std::string trend;
  bool monotone = true;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const Rational small = *GapExperiment(256, seed).ratio;
    const Rational large = seed == 1 ? *big.ratio : *GapExperiment(4096, seed).ratio;
    monotone = monotone && small < large;
    trend += Fmt(" s%llu:%.3f<%.3f", static_cast<unsigned long long>(seed),
                 small.ToDouble(), large.ToDouble());
  }
  return {bracket && monotone,
          Fmt("n=4096 seed=1 m=%lld t=%lld ratio %s = %.4f (need [1.4, 2.0]); "
              "256 vs 4096:%s",
              static_cast<long long>(big.m),
              static_cast<long long>(big.integral_value),
              big.ratio->ToString().c_str(), ratio, trend.c_str())};
}

// ---- 8 ---------------------------------------------------------------------

Outcome RescalingBound() {
  std::mt19937_64 rng(8008);
  std::uniform_int_distribution<int> shift(0, 20);
  int bound_checks = 0, bound_violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const VertexId n = 1 + trial % 40;
    std::vector<Weight> w(n);
    for (auto& x : w) x = (Weight{1} << shift(rng)) + static_cast<Weight>(rng() % 7);
    const Graph g = testing::RandomGraph(rng, n, 1).WithWeights(w);
    const std::int64_t budget =
        trial % 2 == 0 ? kNoEdgeBudget : g.num_edges() / 2 + n;
    const RescaledInstance r = RescaleWeights(g, budget);
    ++bound_checks;
    const Weight n4 = Weight{n} * n * n * n;
    bool ok = r.graph.total_weight() <= n4 * n;
    for (Weight x : r.graph.weights()) ok = ok && x <= n4;
    if (!ok) ++bound_violations;
  }

  int quality_checks = 0, quality_violations = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const VertexId n = 1 + trial % 8;
    std::vector<Weight> w(n);
    for (auto& x : w) x = Weight{1} << (rng() % 13);
    const Graph g = testing::RandomGraph(rng, n, 1).WithWeights(w);
    const Rational factor = (Rational(1) - Rational(1, n)) *
                            (Rational(1) - Rational(1, Weight{n} * n));
    for (std::int64_t budget = 0; budget <= g.num_edges(); ++budget) {
      ++quality_checks;
      const Rational full(BruteMwec(g, budget).value());
      Rational kept(0);
      try {
        const RescaledInstance r = RescaleWeights(g, budget);
        std::vector<Weight> restricted(n);
        for (VertexId v = 0; v < n; ++v) restricted[v] = r.kept[v] ? w[v] : 0;
        kept = Rational(BruteMwec(g.WithWeights(restricted), budget).value());
      } catch (const InputError&) {
        // Nothing fits the budget, so both optima are 0.
      }
      if (kept < factor * full) ++quality_violations;
    }
  }
  return {bound_violations == 0 && quality_violations == 0,
          Fmt("%d weighted instances n<=40: %d bound violations; %d (instance, m') "
              "pairs n<=8: %d restriction violations",
              bound_checks, bound_violations, quality_checks, quality_violations)};
}

// ---- 9 ---------------------------------------------------------------------

Outcome Reduction() {
  const FcecSolver fcec = [](const Graph& g, Weight target) {
    return FcecApprox({g, target}).set;
  };
  std::mt19937_64 rng(9009);
  constexpr int kInstances = 200;
  constexpr int kSeeds = 100;
  int runs = 0, infeasible = 0, met = 0, instances_all = 0, instances_90 = 0;
  const Rational alpha(2), tau(1, 2);
  for (int i = 0; i < kInstances; ++i) {
    const VertexId n = 2 + i % 9;  // 2..10
    const Graph g = testing::RandomGraph(rng, n, i % 2 == 0 ? 1 : 8);
    const std::int64_t budget =
        static_cast<std::int64_t>(rng() % (g.num_edges() + 1));
    const Rational bound =
        Rational(BruteMwec(g, budget).value()) / (alpha * (Rational(1) + tau));
    int met_here = 0;
    for (int seed = 0; seed < kSeeds; ++seed) {
      ReductionOptions options;
      options.alpha = alpha;
      options.tau = tau;
      options.seed = static_cast<std::uint64_t>(seed);
      const ReductionResult r = MwecViaFcec(g, budget, fcec, options);
      ++runs;
      if (Touched(g, r.solution.set) > budget) ++infeasible;
      if (Rational(r.solution.weight) >= bound) ++met_here;
    }
    met += met_here;
    if (met_here == kSeeds) ++instances_all;
    if (10 * met_here >= 9 * kSeeds) ++instances_90;
  }
  // Strict reading: at least 90% of instances meet the bound in at least 90%
  // of their runs.
  const bool statistical = 10 * instances_90 >= 9 * kInstances;
  return {infeasible == 0 && statistical,
          Fmt("%d instances x %d seeds: %d infeasible runs; bound met in %d/%d "
              "runs, %d/%d instances at >=90%% of seeds, %d/%d at every seed",
              kInstances, kSeeds, infeasible, met, runs, instances_90,
              kInstances, instances_all, kInstances)};
}

// ---- 10 --------------------------------------------------------------------

std::string Capture(const std::string& cmd, int* status) {
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  std::string out;
  if (pipe == nullptr) {
    *status = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof(buf), pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  *status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

Outcome Determinism(const std::string& dir) {
  const std::string cli = EDGECOVER_CLI;
  const std::string inst = dir + "/ac10_gnp.txt";
  const std::string k3 = dir + "/ac10_k3.txt";
  const std::vector<std::string> commands = {
      "gen gnp 16 --p 1/4 --seed 7",
      "gen gnp 12 --p 1/3 --seed 3 --max-weight 9 -o " + inst,
      "gen complete 3 -o " + k3,
      "gen path 5",
      "gen star 6 --max-weight 4 --seed 2",
      "solve fcec " + inst + " -W 20 --oracle --audit",
      "solve klowest " + k3 + " -k 2 --oracle --audit",
      "solve mwec " + inst + " --budget 10 --oracle --audit --threads 2",
      "solve mwec-via-fcec " + inst + " --budget 10 --seed 5 --threads 3 --oracle",
      "solve density " + inst + " -U 0,1,2 --oracle --audit",
      "solve density " + k3 + " -U 0",
      "gap 256 --seed 1",
      "gap 1024 --seed 4",
  };
  int differing = 0, failing = 0;
  std::string first_bad;
  for (const auto& args : commands) {
    int s1 = 0, s2 = 0;
    const std::string a = Capture(cli + " " + args, &s1);
    const std::string b = Capture(cli + " " + args, &s2);
    if (s1 != 0 || s2 != 0 || a.empty()) {
      ++failing;
      if (first_bad.empty()) first_bad = args;
    }
    if (a != b) {
      ++differing;
      if (first_bad.empty()) first_bad = args;
    }
  }
  return {differing == 0 && failing == 0,
          Fmt("%zu commands run twice: %d differ, %d failed%s%s", commands.size(),
              differing, failing, first_bad.empty() ? "" : "; first: ",
              first_bad.c_str())};
}

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

}  // namespace
}  // namespace edgecover

int main(int argc, char** argv) {
  using namespace edgecover;
  const std::string dir = argc > 1 ? argv[1] : "/tmp";
  const std::vector<Criterion> criteria = {
      {1, "touching identity", 1, TouchingIdentity},
      {2, "knapsack surrogate exactness", 30, KnapsackExactness},
      {3, "FCEC ratio within 2, witnessed above 3/2", 60, FcecRatio},
      {4, "uniform k-lowest-degree shortcut", 60, UniformShortcut},
      {5, "MWEC feasibility and half-optimality", 300, MwecHalfOptimal},
      {6, "density augmentation exactness", 120, DensityExactness},
      {7, "integrality gap bracket and trend", 60, IntegralityGap},
      {8, "rescaling bound", 120, RescalingBound},
      {9, "MWEC via FCEC reduction", 300, Reduction},
      {10, "determinism", 120, [&] { return Determinism(dir); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = Seconds(start);
    const bool in_time = elapsed < c.limit_seconds;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failed;
    std::printf("%s AC%d %s: %s; %.2f s (limit %.0f s)\n", pass ? "PASS" : "FAIL",
                c.id, c.name, outcome.detail.c_str(), elapsed, c.limit_seconds);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
