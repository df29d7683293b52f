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

#include "clusterbound/generators.hpp"
#include "clusterbound/space_io.hpp"
#include "clusterbound/verify.hpp"
#include "oracles.hpp"

namespace clusterbound {
namespace {

FiniteSemimetricSpace FourPoint() {
  const Rational h(1, 2), f(5, 2);
  return FiniteSemimetricSpace::FromRows({"a", "b", "c", "d"},
                                         {{0, h, 2, 2}, {h, 0, 2, 2}, {2, 2, 0, f}, {2, 2, f, 0}});
}

TEST(PropId, ParseAndPrint) {
  for (PropId id : kAllProps) EXPECT_EQ(ParsePropId(ToString(id)), id);
  EXPECT_THROW(ParsePropId("P9"), std::invalid_argument);
}

TEST(CheckProposition, P4OnTightInstance) {
  const auto r = CheckProposition(TightInstance({2, 3, 3, 1}), {1, 2}, PropId::kP4);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, "27/1");
  EXPECT_EQ(r.rhs, "9/2");
}

TEST(CheckProposition, P2OnFourPointSpace) {
  const auto r = CheckProposition(FourPoint(), {1, 1}, PropId::kP2);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.lhs, "5/1");
  EXPECT_EQ(r.rhs, "3/1");
}

TEST(CheckProposition, T1NotApplicableOnTightInstance) {
  const auto r = CheckProposition(TightInstance({2, 3, 3, 1}), {1, 2}, PropId::kT1);
  EXPECT_FALSE(r.applicable);
  EXPECT_FALSE(r.reason.empty());
}

TEST(CheckProposition, P1OnWitness) {
  const auto r = CheckProposition(TightInstance({2, 3, 3, 1}), {1, 2}, PropId::kP1);
  ASSERT_TRUE(r.applicable);
  EXPECT_TRUE(r.pass);
  ASSERT_EQ(r.inequalities.size(), 4U);
  EXPECT_EQ(r.inequalities[1].lhs, "27/1");
  EXPECT_EQ(r.inequalities[1].rhs, "27/1");
  EXPECT_EQ(r.inequalities[3].lhs, "3/1");
  EXPECT_FALSE(CheckProposition(oracle::S3(), {1, 2}, PropId::kP1).applicable);
}

TEST(CheckProposition, NonMetricSpacesGateTheMetricChecks) {
  // d(b1,b2) = d(a,b2) = 1, d(a,b1) = 2.5: the part inequality fails here, so
  // the checks that rely on the triangle inequality must not be applied.
  const auto s = FiniteSemimetricSpace::FromRows(
      {"a", "b1", "b2"}, {{0, Rational(5, 2), 1}, {Rational(5, 2), 0, 1}, {1, 1, 0}});
  ASSERT_FALSE(s.IsMetric());
  for (PropId id : {PropId::kP2, PropId::kP3, PropId::kP4, PropId::kP5, PropId::kP6, PropId::kT1}) {
    EXPECT_FALSE(CheckProposition(s, {1, 1}, id).applicable) << ToString(id);
  }
}

TEST(RunSuite, EmptyAndDeterministic) {
  SuiteConfig empty;
  empty.trials = 0;
  const auto none = RunSuite(empty);
  EXPECT_TRUE(none.failures.empty());
  for (const auto& t : none.tallies) EXPECT_EQ(t.applicable, 0U);

  SuiteConfig small;
  small.trials = 30;
  small.max_n = 8;
  const auto a = RunSuite(small), b = RunSuite(small);
  EXPECT_EQ(a.failures.size(), b.failures.size());
  for (std::size_t p = 0; p < kAllProps.size(); ++p) {
    EXPECT_EQ(a.tallies[p].applicable, b.tallies[p].applicable);
    EXPECT_EQ(a.tallies[p].passed, b.tallies[p].passed);
  }
  EXPECT_TRUE(a.failures.empty());

  SuiteConfig too_big;
  too_big.max_n = 40;
  EXPECT_THROW(RunSuite(too_big), std::invalid_argument);
}

TEST(RunSuite, TrialInstancesAreMetricAndWithinBounds) {
  SuiteConfig config;
  config.trials = 60;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto trial = MakeTrialInstance(config, t);
    EXPECT_LE(trial.space.size(), config.max_n);
    EXPECT_GE(trial.params.k, config.k_min);
    EXPECT_LE(trial.params.k, config.k_max);
    EXPECT_TRUE(trial.space.IsMetric());
    EXPECT_EQ(trial.generator, config.mix[t % config.mix.size()]);
    EXPECT_EQ(MakeTrialInstance(config, t).space, trial.space);
  }
}

TEST(ReproduceFailure, RecordRoundTripsTheVerdict) {
  SuiteConfig config;
  for (std::size_t t = 0; t < 12; ++t) {
    const auto trial = MakeTrialInstance(config, t);
    for (PropId id : kAllProps) {
      FailureRecord record;
      record.trial = t;
      record.generator = trial.generator;
      record.params = trial.params;
      record.result = CheckProposition(trial.space, trial.params, id);
      record.space_text = io::FormatSpaceText(trial.space);
      const auto again = ReproduceFailure(record);
      EXPECT_EQ(again.applicable, record.result.applicable);
      EXPECT_EQ(again.pass, record.result.pass);
      EXPECT_EQ(again.lhs, record.result.lhs);
      EXPECT_EQ(again.rhs, record.result.rhs);
    }
  }
}

// The checks hold on random metric spaces outside the suite's generators too.
TEST(CheckProposition, NoFailuresOnRandomMetricSpaces) {
  Rng rng(71);
  std::size_t applicable = 0;
  for (int rep = 0; rep < 150; ++rep) {
    const auto s = oracle::RandomSpace(rng, 1 + rng.Between(0, 9), 48, true);
    const ScaleParams p{Rational(static_cast<long>(rng.Between(1, 12)), 8),
                        1 + static_cast<unsigned>(rng.Between(0, 2))};
    const auto ev = CollectEvidence(s, p);
    for (PropId id : kAllProps) {
      const auto r = CheckProposition(ev, id);
      if (!r.applicable) continue;
      ++applicable;
      EXPECT_TRUE(r.pass) << ToString(id) << " rep " << rep << "\n" << io::FormatSpaceText(s);
    }
  }
  EXPECT_GT(applicable, 300U);
}

}  // namespace
}  // namespace clusterbound
