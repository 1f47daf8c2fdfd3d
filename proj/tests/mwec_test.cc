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

#include <random>

#include "edgecover/error.h"
#include "edgecover/oracles.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace edgecover {
namespace {

TEST(MwecDpTest, PathExamples) {
  const Graph path = GeneratePath(3);
  EXPECT_EQ(MwecDp({path, 1}).weight, 1);
  const Solution two = MwecDp({path, 2});
  EXPECT_GE(two.weight, 1);
  EXPECT_LE(two.touched, 2);
  // V itself touches both edges, so the optimum at m' = 2 is 3.
  EXPECT_EQ(BruteMwec(path, 2).value(), 3);
}

// V is optimal at m' = m, but the table only admits Q with deg(Q) <= m' - deg(h).
TEST(MwecDpTest, FullBudgetKeepsHalfTheWeight) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = testing::RandomGraph(rng, 1 + trial % 9, 8);
    const Solution s = MwecDp({g, g.num_edges()});
    EXPECT_GE(2 * s.weight, g.total_weight());
  }
  const Graph star = GenerateStar(3);
  EXPECT_EQ(MwecDp({star, 3}).weight, 3);
}

TEST(MwecDpTest, ZeroBudgetWithoutIsolatedVertices) {
  const Solution s = MwecDp({GenerateComplete(5), 0});
  EXPECT_TRUE(s.set.empty());
  EXPECT_EQ(s.weight, 0);
  const Graph g(3, {5, 1, 1}, {{1, 2}});
  EXPECT_EQ(MwecDp({g, 0}).set, VertexSet({0}));
}

TEST(MwecDpTest, RejectsNegativeBudget) {
  EXPECT_THROW(MwecDp({GeneratePath(3), -1}), InputError);
}

TEST(MwecDpTest, FeasibleAndHalfOptimal) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = testing::RandomGraph(rng, 1 + trial % 10, 8);
    for (std::int64_t budget = 0; budget <= g.num_edges(); ++budget) {
      const Solution s = MwecDp({g, budget});
      ASSERT_LE(s.touched, budget);
      ASSERT_EQ(s.touched, Touched(g, s.set));
      ASSERT_GE(2 * s.weight, BruteMwec(g, budget).value());
    }
  }
}

TEST(MwecDpTest, ThreadCountDoesNotChangeResult) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::RandomGraph(rng, 12, 8);
    const std::int64_t budget = g.num_edges() / 3;
    EXPECT_EQ(MwecDp({g, budget}, {1}).set, MwecDp({g, budget}, {4}).set);
  }
}

// Pinning h to the heaviest member of an optimum is enough on its own.
TEST(MwecGuessTableTest, OptimalGuessIsHalfOptimal) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = testing::RandomGraph(rng, 2 + trial % 9, 8);
    const std::int64_t budget = trial % (g.num_edges() + 1);
    const OracleResult opt = BruteMwec(g, budget);
    if (opt.witness.empty()) continue;
    VertexId h = *opt.witness.begin();
    for (VertexId v : opt.witness) {
      if (g.weight(v) > g.weight(h) || (g.weight(v) == g.weight(h) && v > h)) h = v;
    }
    const auto s = MwecDpForGuess({g, budget}, h);
    ASSERT_TRUE(s.has_value());
    ASSERT_GE(2 * s->weight, opt.value());
    ASSERT_LE(s->touched, budget);
  }
}

TEST(MwecGuessTableTest, BaseCasesAndMonotonicity) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = testing::RandomGraph(rng, 7, 5);
    const std::int64_t budget = trial % (g.num_edges() + 1);
    for (VertexId h = 0; h < g.num_vertices(); ++h) {
      const MwecGuessTable t(g, budget, h);
      ASSERT_EQ(t.feasible(), g.degree(h) <= budget);
      if (!t.feasible()) {
        EXPECT_FALSE(t.Best().has_value());
        continue;
      }
      const std::int64_t limit = 2 * (budget - g.degree(h));
      const std::int64_t rows = static_cast<std::int64_t>(t.pool().size());
      for (std::int64_t p = -1; p <= t.max_p() + 1; ++p) {
        for (std::int64_t d = -1; d <= t.max_d() + 1; ++d) {
          const std::int64_t base = t.At(0, p, d);
          const bool inf = p > 0 || d < 0 || d > limit;
          ASSERT_EQ(base == MwecGuessTable::kNegInf, inf);
          if (!inf) {
            ASSERT_EQ(base, 0);
          }
          for (std::int64_t i = 0; i <= rows; ++i) {
            if (d > 0 && d <= limit) {
              ASSERT_LE(t.At(i, p, d - 1), t.At(i, p, d));
            }
            ASSERT_GE(t.At(i, p - 1, d), t.At(i, p, d));
            if (i > 0) {
              ASSERT_LE(t.At(i - 1, p, d), t.At(i, p, d));
            }
          }
        }
      }
      for (VertexId v : t.pool()) {
        ASSERT_TRUE(g.weight(v) < g.weight(h) ||
                    (g.weight(v) == g.weight(h) && v < h));
      }
    }
  }
}

TEST(MwecFeasibilityAuditTest, Examples) {
  const Graph k3 = GenerateComplete(3);
  EXPECT_TRUE(MwecFeasibilityAudit(k3, {0}, 2));
  EXPECT_FALSE(MwecFeasibilityAudit(k3, {0}, 1));
  EXPECT_TRUE(MwecFeasibilityAudit(GenerateStar(4), {1, 2, 3, 4}, 4));
}

}  // namespace
}  // namespace edgecover
