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

#include <random>

#include "edgecover/error.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace edgecover {
namespace {

TEST(BruteFcecTest, Examples) {
  const OracleResult star = BruteFcec(GenerateStar(4), 2);
  EXPECT_EQ(star.value(), 2);
  EXPECT_EQ(star.witness, VertexSet({1, 2}));
  EXPECT_EQ(BruteFcec(GenerateComplete(3), 3).value(), 3);
  const OracleResult zero = BruteFcec(GeneratePath(4), 0);
  EXPECT_EQ(zero.value(), 0);
  EXPECT_TRUE(zero.witness.empty());
  EXPECT_EQ(BruteFcec(testing::TwoDisjointEdges(), 2).value(), 1);
}

TEST(BruteMwecTest, Examples) {
  const Graph path = GeneratePath(3);
  EXPECT_EQ(BruteMwec(path, 1).value(), 1);
  EXPECT_EQ(BruteMwec(path, 2).value(), 3);
  EXPECT_EQ(BruteMwec(GenerateComplete(4), 6).value(), 4);
  EXPECT_EQ(BruteMwec(GenerateComplete(4), 0).value(), 0);
}

TEST(BruteDensityAugTest, Examples) {
  EXPECT_EQ(BruteDensityAug(GenerateComplete(3), {0}).ratio(), Rational(3, 4));
  EXPECT_EQ(BruteDensityAug(Graph(2, {{0, 1}}), {0}).ratio(), Rational(1));
  const OracleResult path = BruteDensityAug(GeneratePath(3), {});
  EXPECT_EQ(path.ratio(), Rational(1, 2));
  EXPECT_EQ(path.enumerated, 8u);
}

TEST(BruteMinDegKnapsackTest, Examples) {
  EXPECT_EQ(BruteMinDegKnapsack(GenerateStar(4), 2).value(), 2);
  EXPECT_EQ(BruteMinDegKnapsack(GeneratePath(3), 0).value(), 0);
  EXPECT_EQ(BruteMinDegKnapsack(GenerateComplete(4), 2).value(), 6);
}

TEST(OracleTest, Errors) {
  EXPECT_THROW(BruteFcec(GeneratePath(3), 4), InfeasibleError);
  EXPECT_THROW(BruteMinDegKnapsack(GeneratePath(3), 4), InfeasibleError);
  EXPECT_THROW(BruteFcec(GeneratePath(15), 1), CapRefusalError);
  EXPECT_THROW(BruteMwec(GeneratePath(15), 1), CapRefusalError);
  EXPECT_THROW(BruteMwec(GeneratePath(5), 1, 4), CapRefusalError);
  EXPECT_THROW(BruteDensityAug(GeneratePath(16), {0}), CapRefusalError);
  EXPECT_NO_THROW(BruteDensityAug(GeneratePath(15), {0}));
  EXPECT_THROW(BruteDensityAug(Graph(3, {{0, 1}}), {0, 1}), NoCandidateError);
}

TEST(OracleTest, EnumeratesEverySubsetOnce) {
  EXPECT_EQ(BruteFcec(GeneratePath(6), 0).enumerated, 64u);
  EXPECT_EQ(BruteDensityAug(GeneratePath(6), {0, 1}).enumerated, 16u);
}

// The first optimum in (size, lexicographic) order is reported.
TEST(OracleTest, WitnessOrder) {
  EXPECT_EQ(BruteFcec(GenerateComplete(4), 2).witness, VertexSet({0, 1}));
  EXPECT_EQ(BruteMwec(GeneratePath(3), 1).witness, VertexSet({0}));
}

TEST(OracleTest, WitnessReevaluatesToOptimum) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const VertexId n = 1 + trial % 9;
    const Graph g = testing::RandomGraph(rng, n, 5);
    const Weight target = trial % (g.total_weight() + 1);
    const OracleResult f = BruteFcec(g, target);
    ASSERT_EQ(Touched(g, f.witness), f.value());
    ASSERT_GE(WeightOf(g, f.witness), target);
    const OracleResult k = BruteMinDegKnapsack(g, target);
    ASSERT_EQ(DegSum(g, k.witness), k.value());
    const std::int64_t budget = trial % (g.num_edges() + 1);
    const OracleResult m = BruteMwec(g, budget);
    ASSERT_EQ(WeightOf(g, m.witness), m.value());
    ASSERT_LE(Touched(g, m.witness), budget);
    const VertexSet u = testing::RandomSubset(rng, n);
    try {
      const OracleResult d = BruteDensityAug(g, u);
      ASSERT_EQ(Rational(InternalEdges(g, d.witness) + CrossEdges(g, u, d.witness),
                         DegSum(g, d.witness)),
                d.ratio());
    } catch (const NoCandidateError&) {
    } catch (const InputError&) {
    }
  }
}

}  // namespace
}  // namespace edgecover
