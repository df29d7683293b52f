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

#ifndef CLUSTERBOUND_VERIFY_HPP_
#define CLUSTERBOUND_VERIFY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "clusterbound/bounds.hpp"
#include "clusterbound/clustering.hpp"
#include "clusterbound/space.hpp"
#include "clusterbound/stats.hpp"

namespace clusterbound {

enum class PropId { kP1, kP2, kP3, kP4, kP5, kP6, kT1 };

inline constexpr std::array<PropId, 7> kAllProps = {PropId::kP1, PropId::kP2, PropId::kP3, PropId::kP4,
                                                     PropId::kP5, PropId::kP6, PropId::kT1};

const char* ToString(PropId id);
// Accepts "P1".."P6", "T1". Throws std::invalid_argument.
PropId ParsePropId(const std::string& text);

// One displayed inequality or identity: `lhs relation rhs`.
struct Inequality {
  std::string name;
  std::string relation;  // "<=", ">=", "=="
  std::string lhs;       // exact rational "p/q" unless noted in `name`
  std::string rhs;
  bool holds = false;
};

struct CheckResult {
  PropId id = PropId::kP1;
  bool applicable = false;
  std::string reason;  // why not applicable
  bool pass = false;   // meaningful only when applicable
  std::string lhs;     // first inequality, duplicated for quick reading
  std::string rhs;
  std::vector<Inequality> inequalities;
};

struct VerifyOptions {
  ExactOptions exact;
  CountOptions counting;
};

// Everything the checks need about one instance, computed once.
struct InstanceEvidence {
  const FiniteSemimetricSpace* space = nullptr;
  ScaleParams params;
  bool metric = false;
  ObservedParams observed;
  GreedyDecomposition decomposition;
  ClusterStructure greedy;
  std::optional<ExactResult> exact;
  std::string exact_note;
};

InstanceEvidence CollectEvidence(const FiniteSemimetricSpace& space, const ScaleParams& params,
                                 const VerifyOptions& options = {});

CheckResult CheckProposition(const InstanceEvidence& evidence, PropId id);
CheckResult CheckProposition(const FiniteSemimetricSpace& space, const ScaleParams& params, PropId id,
                             const VerifyOptions& options = {});

enum class GeneratorKind { kPlanted, kTight, kUniform };
const char* ToString(GeneratorKind kind);

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 200;
  std::size_t max_n = 10;
  unsigned k_min = 1;
  unsigned k_max = 3;
  // Trial t uses mix[t % mix.size()].
  std::vector<GeneratorKind> mix = {GeneratorKind::kPlanted, GeneratorKind::kTight, GeneratorKind::kUniform};
  VerifyOptions options;
};

struct Tally {
  std::size_t applicable = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct FailureRecord {
  std::size_t trial = 0;
  GeneratorKind generator = GeneratorKind::kPlanted;
  ScaleParams params;
  CheckResult result;
  std::string space_text;  // reproducer in the space file format
};

struct VerificationReport {
  SuiteConfig config;
  std::array<Tally, kAllProps.size()> tallies{};
  std::vector<FailureRecord> failures;
  std::size_t incomplete_exact = 0;  // trials whose exact search hit its budget
  std::size_t checks_failed() const { return failures.size(); }
};

// Generates `trials` metric instances (planted and uniform-random ones go
// through MetricClosure), runs every check and aggregates. Deterministic in
// the config.
VerificationReport RunSuite(const SuiteConfig& config);

// Trial t's instance and parameters, exactly as RunSuite builds them.
struct TrialInstance {
  GeneratorKind generator;
  ScaleParams params;
  FiniteSemimetricSpace space;
};
TrialInstance MakeTrialInstance(const SuiteConfig& config, std::size_t trial);

// Reloads the serialized instance and re-runs the check.
CheckResult ReproduceFailure(const FailureRecord& failure, const VerifyOptions& options = {});

}  // namespace clusterbound

#endif  // CLUSTERBOUND_VERIFY_HPP_
