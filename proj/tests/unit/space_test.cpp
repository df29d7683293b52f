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

#include <string>

#include "clusterbound/generators.hpp"
#include "clusterbound/space.hpp"
#include "clusterbound/space_io.hpp"
#include "oracles.hpp"

namespace clusterbound {
namespace {

using oracle::S3;

std::string BuildError(const std::vector<std::vector<Rational>>& rows) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows.size(); ++i) labels.push_back("q" + std::to_string(i));
  try {
    FiniteSemimetricSpace::FromRows(labels, rows);
  } catch (const SpaceError& e) {
    return e.what();
  }
  return "";
}

TEST(BuildSpace, S3AndSingleton) {
  const auto s = S3();
  EXPECT_EQ(s.size(), 3U);
  EXPECT_EQ(s.dist(1, 2), 4);
  EXPECT_EQ(s.label(0), "p0");
  const auto one = FiniteSemimetricSpace::FromRows({"solo"}, {{0}});
  EXPECT_EQ(one.size(), 1U);
}

TEST(BuildSpace, RejectionsNameTheCell) {
  EXPECT_EQ(BuildError({{0, 1}, {2, 0}}), "asymmetric at (0,1)");
  EXPECT_NE(BuildError({{1, 1}, {1, 0}}).find("nonzero diagonal at (0,0)"), std::string::npos);
  EXPECT_NE(BuildError({{0, -1}, {-1, 0}}).find("negative entry at (0,1)"), std::string::npos);
  EXPECT_NE(BuildError({{0, 1}, {1}}).find("ragged"), std::string::npos);
}

TEST(BuildSpace, MetricFlagIsOptional) {
  const std::vector<std::vector<Rational>> rows = {{0, 1, 4}, {1, 0, 1}, {4, 1, 0}};
  EXPECT_NO_THROW(FiniteSemimetricSpace::FromRows({"a", "b", "c"}, rows));
  EXPECT_THROW(FiniteSemimetricSpace::FromRows({"a", "b", "c"}, rows, {.require_metric = true}), SpaceError);
  EXPECT_FALSE(FiniteSemimetricSpace::FromRows({"a", "b", "c"}, rows).IsMetric());
  EXPECT_TRUE(S3().IsMetric() == false);  // 4 > 0.5 + 2
}

TEST(ClassifyEdge, ExamplesAndBoundaries) {
  const auto s = S3();
  EXPECT_EQ(ClassifyEdge(s, 0, 1, 1), EdgeClass::kShort);
  EXPECT_EQ(ClassifyEdge(s, 0, 2, 1), EdgeClass::kMedium);
  EXPECT_EQ(ClassifyEdge(s, 1, 2, 1), EdgeClass::kLong);
  EXPECT_EQ(ClassifyEdge(s, 0, 1, Rational(1, 2)), EdgeClass::kShort);  // rho == r
  EXPECT_EQ(ClassifyEdge(s, 1, 2, Rational(4, 3)), EdgeClass::kMedium);  // rho == 3r
  EXPECT_EQ(ClassifyEdge(s, 2, 1, 1), ClassifyEdge(s, 1, 2, 1));
  EXPECT_THROW(ClassifyEdge(s, 1, 1, 1), std::invalid_argument);
}

TEST(SubsetDiameter, Examples) {
  const auto s = S3();
  EXPECT_EQ(SubsetDiameter(s, {0}), 0);
  EXPECT_EQ(SubsetDiameter(s, {0, 1, 2}), 4);
  EXPECT_EQ(SubsetDiameter(s, {}), 0);
}

TEST(SetDistance, Examples) {
  const auto s = S3();
  EXPECT_EQ(SetDistance(s, {0, 1}, {2}), 2);
  EXPECT_EQ(SetDistance(s, {0}, {0, 1}), 0);
  EXPECT_THROW(SetDistance(s, {}, {0}), std::invalid_argument);
}

TEST(Keys, ThresholdsAreExact) {
  const auto s = FiniteSemimetricSpace::FromRows({"a", "b"}, {{0, Rational(1, 3)}, {Rational(1, 3), 0}});
  const std::int64_t k = s.key(0, 1);
  EXPECT_LE(k, s.KeyAtMost(Rational(1, 3)));
  EXPECT_GT(k, s.KeyBelow(Rational(1, 3)));
  EXPECT_GT(k, s.KeyAtMost(Rational(33, 100)));
  EXPECT_LE(k, s.KeyBelow(Rational(334, 1000)));
  EXPECT_TRUE(s.AdjacencyAtMost(Rational(1, 3))[0].Test(1));
  EXPECT_FALSE(s.AdjacencyBelow(Rational(1, 3))[0].Test(1));
  EXPECT_FALSE(s.AdjacencyAbove(Rational(1, 3))[0].Test(1));
  EXPECT_FALSE(s.AdjacencyAtMost(1)[0].Test(0));  // diagonal cleared
}

TEST(SpaceText, ParseFormatRoundTrip) {
  const std::string text = "3\np0 p1 p2\n0 0.5 2\n0.5 0 4\n2 4 0\n";
  const auto s = io::ParseSpaceText(text, "s3.txt");
  EXPECT_EQ(s, S3());
  EXPECT_EQ(io::FormatSpaceText(s), text);  // decimals echo verbatim
  EXPECT_EQ(io::ParseSpaceText(io::FormatSpaceText(s)), s);
}

TEST(SpaceText, DecimalTokensAreKept) {
  const std::string text = "2\na b\n0 0.50\n0.50 0\n";
  EXPECT_EQ(io::FormatSpaceText(io::ParseSpaceText(text)), text);
}

TEST(SpaceText, ErrorsNameFileAndLine) {
  auto message = [](const std::string& text) {
    try {
      io::ParseSpaceText(text, "bad.txt");
    } catch (const io::InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message("2\na b\n0 1\n2 0\n"), "bad.txt:3: asymmetric at (0,1)");
  EXPECT_NE(message("2\na b\n0 x\n1 0\n").find("bad.txt:3:"), std::string::npos);
  EXPECT_NE(message("2\na b\n0 1\n").find("bad.txt"), std::string::npos);
  EXPECT_NE(message("two\n").find("bad.txt:1:"), std::string::npos);
  EXPECT_NE(message("2\na\n0 1\n1 0\n").find("bad.txt:2:"), std::string::npos);
}

TEST(SpaceJson, RoundTripAndWeights) {
  const auto s = S3();
  const auto doc = io::SpaceToJson(s);
  EXPECT_EQ(doc["n"], 3);
  EXPECT_EQ(doc["dist"][0][1], "0.5");
  EXPECT_EQ(io::SpaceFromJson(doc), s);

  auto with_weights = doc;
  with_weights["weights"] = {"0.5", "1/4", "0.25"};
  const auto loaded = io::ParseSpaceAny(with_weights.dump(), "w.json");
  EXPECT_EQ(loaded.space, s);
  ASSERT_EQ(loaded.weights.size(), 3U);
  EXPECT_EQ(loaded.weights[1], Rational(1, 4));

  auto bad = doc;
  bad["dist"][1][0] = "0.75";
  EXPECT_THROW(io::SpaceFromJson(bad, "b.json"), io::InputError);
}

TEST(SpaceProperties, EdgeClassesPartitionAndDiameterIsMonotone) {
  Rng rng(5);
  for (int rep = 0; rep < 30; ++rep) {
    const auto s = oracle::RandomSpace(rng, 7, 40, rep % 2 == 0);
    const Rational r(static_cast<long>(rng.Between(1, 12)), 8);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j) continue;
        const auto c = ClassifyEdge(s, i, j, r);
        const int hits = (s.dist(i, j) <= r) + (s.dist(i, j) > r && s.dist(i, j) <= 3 * r) + (s.dist(i, j) > 3 * r);
        EXPECT_EQ(hits, 1);
        EXPECT_EQ(c, ClassifyEdge(s, j, i, r));
      }
    }
    PointSet grow;
    Rational last = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
      grow.push_back(p);
      const Rational d = SubsetDiameter(s, grow);
      EXPECT_GE(d, last);
      last = d;
    }
    const PointSet a = {0, 2}, b = {3, 5, 6};
    EXPECT_EQ(SetDistance(s, a, b), SetDistance(s, b, a));
    for (std::size_t x : a) {
      for (std::size_t y : b) EXPECT_LE(SetDistance(s, a, b), s.dist(x, y));
    }
  }
}

TEST(SpaceProperties, TextRoundTripOnRandomSpaces) {
  Rng rng(77);
  for (int rep = 0; rep < 20; ++rep) {
    const auto s = oracle::RandomSpace(rng, 1 + rep % 9, 100, false);
    const auto once = io::ParseSpaceText(io::FormatSpaceText(s));
    EXPECT_EQ(once, s);
    EXPECT_EQ(io::FormatSpaceText(once), io::FormatSpaceText(s));
    EXPECT_EQ(io::SpaceFromJson(io::SpaceToJson(s)), s);
  }
}

}  // namespace
}  // namespace clusterbound
