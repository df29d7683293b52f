// Copyright 2026 The Clusterbound Authors.
//
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

#include <gtest/gtest.h>

#include <vector>

#include "clusterbound/generators.hpp"
#include "clusterbound/stats.hpp"
#include "oracles.hpp"

namespace clusterbound {
namespace {

using oracle::S3;

FiniteSemimetricSpace Tight232() { return TightInstance({2, 3, 3, 1}); }

TEST(MediumEdgeCount, Examples) {
  EXPECT_EQ(MediumEdgeCount(S3(), 1), 1);
  EXPECT_EQ(MediumEdgeCount(Tight232(), 1), 0);
  EXPECT_EQ(MediumEdgeCount(FiniteSemimetricSpace::FromRows({"a"}, {{0}}), 1), 0);
}

TEST(AnticliqueCount, Examples) {
  EXPECT_EQ(AnticliqueCount(S3(), 1, 2), 2);
  EXPECT_EQ(AnticliqueCount(S3(), 1, 3), 0);
  EXPECT_EQ(AnticliqueCount(Tight232(), 1, 3), 27);
  EXPECT_EQ(AnticliqueCount(Tight232(), 1, 1), 9);
  EXPECT_THROW(AnticliqueCount(S3(), 1, 0), std::invalid_argument);
}

TEST(AnticliqueCount, BudgetIsEnforced) {
  const auto s = TightInstance({3, 4, 4, 1});
  EXPECT_THROW(AnticliqueCount(s, 1, 4, {.max_nodes = 10}), BudgetExceeded);
  EXPECT_EQ(AnticliqueCount(s, 1, 4, {.max_nodes = 0}), 256);
}

TEST(ElementarySymmetric, Examples) {
  const std::vector<std::size_t> v = {3, 2, 1};
  EXPECT_EQ(ElementarySymmetric(v, 2), 11);
  EXPECT_EQ(ElementarySymmetric(v, 0), 1);
  EXPECT_EQ(ElementarySymmetric(v, 4), 0);
  EXPECT_EQ(ElementarySymmetric(v, 3), 6);
}

TEST(ObservedParameters, Examples) {
  const auto tight = ObservedParameters(Tight232(), {1, 2});
  EXPECT_EQ(tight.medium_edges, 0);
  EXPECT_EQ(tight.anticliques_k, 27);
  EXPECT_EQ(tight.anticliques_k1, 27);
  EXPECT_EQ(tight.delta, 0);
  EXPECT_EQ(tight.alpha, Rational(2, 3));
  EXPECT_EQ(tight.beta, Rational(2, 9));

  const auto s3 = ObservedParameters(S3(), {1, 2});
  EXPECT_EQ(s3.medium_edges, 1);
  EXPECT_EQ(s3.anticliques_k, 2);
  EXPECT_EQ(s3.anticliques_k1, 0);
  EXPECT_EQ(s3.delta, Rational(2, 9));
  EXPECT_EQ(s3.alpha, Rational(4, 9));
  EXPECT_EQ(s3.beta, 0);

  const auto one = ObservedParameters(FiniteSemimetricSpace::FromRows({"a"}, {{0}}), {1, 1});
  EXPECT_EQ(one.delta, 0);
  EXPECT_EQ(one.alpha, 1);
  EXPECT_EQ(one.beta, 0);

  const auto empty = ObservedParameters(FiniteSemimetricSpace(), {1, 2});
  EXPECT_EQ(empty.n, 0U);
  EXPECT_EQ(empty.alpha, 0);
}

TEST(StatsOracle, CountsMatchEnumeration) {
  Rng rng(11);
  for (int rep = 0; rep < 60; ++rep) {
    const std::size_t n = 1 + rng.Between(0, 11);
    const auto s = oracle::RandomSpace(rng, n, 48, rep % 3 == 0);
    const Rational r(static_cast<long>(rng.Between(1, 16)), 8);
    EXPECT_EQ(MediumEdgeCount(s, r), oracle::MediumEdges(s, r));
    for (unsigned order = 1; order <= 5; ++order) {
      EXPECT_EQ(AnticliqueCount(s, r, order), oracle::Anticliques(s, r, order)) << "rep " << rep << " s " << order;
    }
  }
}

TEST(StatsProperties, ObservedValuesMakeTheHypothesesEqualities) {
  Rng rng(12);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 1 + rng.Between(0, 9);
    const auto s = oracle::RandomSpace(rng, n, 48, false);
    const unsigned k = 1 + static_cast<unsigned>(rng.Between(0, 2));
    const ScaleParams p{Rational(static_cast<long>(rng.Between(1, 16)), 8), k};
    const auto o = ObservedParameters(s, p);
    const Rational nn(static_cast<long>(n));
    EXPECT_EQ(Rational(o.medium_edges), o.delta * nn * nn / 2);
    EXPECT_EQ(Rational(o.anticliques_k1), o.beta * Pow(nn, k + 1) / Rational(Factorial(k + 1)));
    EXPECT_EQ(Rational(o.anticliques_k), o.alpha * Pow(nn, k) / Rational(Factorial(k)));
  }
}

TEST(StatsProperties, AnticliquesAntitoneAndBoundedByBinomial) {
  Rng rng(13);
  for (int rep = 0; rep < 40; ++rep) {
    const std::size_t n = 2 + rng.Between(0, 8);
    const auto s = oracle::RandomSpace(rng, n, 48, rep % 2 == 0);
    const std::vector<std::size_t> ones(n, 1);
    for (unsigned order = 1; order <= 4; ++order) {
      BigInt previous = AnticliqueCount(s, Rational(1, 8), order);
      EXPECT_LE(previous, ElementarySymmetric(ones, order));
      for (long eighths = 2; eighths <= 48; eighths += 3) {
        const BigInt current = AnticliqueCount(s, Rational(eighths, 8), order);
        EXPECT_LE(current, previous);
        previous = current;
      }
    }
    // Counts are not monotone in the order (n points far apart give T_1 = n,
    // T_2 = n(n-1)/2). What does hold: each (s+1)-anticlique contains s+1
    // anticliques of order s, each extendable by at most n-s points.
    for (unsigned order = 1; order <= 4; ++order) {
      const Rational r(1);
      EXPECT_LE(BigInt(order + 1) * AnticliqueCount(s, r, order + 1),
                BigInt(n - order) * AnticliqueCount(s, r, order));
    }
  }
}

TEST(StatsProperties, ElementaryRecurrenceAndOracle) {
  Rng rng(14);
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = rng.Between(0, 12);
    std::vector<BigInt> v(n);
    for (auto& x : v) x = BigInt(rng.Between(0, 9));
    const BigInt w = BigInt(rng.Between(0, 9));
    std::vector<BigInt> vw = v;
    vw.push_back(w);
    for (unsigned s = 0; s <= n + 1; ++s) {
      EXPECT_EQ(ElementarySymmetric(v, s), oracle::Elementary(v, s));
      const BigInt lower = s == 0 ? BigInt(0) : ElementarySymmetric(v, s - 1);
      EXPECT_EQ(ElementarySymmetric(vw, s), ElementarySymmetric(v, s) + w * lower);
    }
  }
}

}  // namespace
}  // namespace clusterbound
