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

#include "clusterbound/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "clusterbound/generators.hpp"
#include "clusterbound/space_io.hpp"

namespace clusterbound {
namespace {

std::string Exact(const Rational& value) { return ToFractionString(value); }
std::string Exact(std::size_t value) { return ToFractionString(Rational(value)); }

std::string Approx(const Float50& value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.15g", value.convert_to<double>());
  return buffer;
}

void Add(CheckResult& result, std::string name, const std::string& relation, const Rational& lhs,
         const Rational& rhs) {
  bool holds = false;
  if (relation == "<=") holds = lhs <= rhs;
  if (relation == ">=") holds = lhs >= rhs;
  if (relation == "==") holds = lhs == rhs;
  result.inequalities.push_back({std::move(name), relation, Exact(lhs), Exact(rhs), holds});
}

CheckResult NotApplicable(PropId id, std::string reason) {
  CheckResult result;
  result.id = id;
  result.applicable = false;
  result.reason = std::move(reason);
  return result;
}

CheckResult Finish(CheckResult result) {
  if (result.inequalities.empty()) return NotApplicable(result.id, "no instance of the inequality to check");
  result.applicable = true;
  result.pass = std::all_of(result.inequalities.begin(), result.inequalities.end(),
                            [](const Inequality& q) { return q.holds; });
  result.lhs = result.inequalities.front().lhs;
  result.rhs = result.inequalities.front().rhs;
  return result;
}

Rational SizeOf(std::size_t v) { return Rational(BigInt(v)); }

std::vector<BigInt> SortedSizes(const GreedyDecomposition& d) {
  return std::vector<BigInt>(d.sorted_sizes.begin(), d.sorted_sizes.end());
}

CheckResult CheckP1(const InstanceEvidence& ev) {
  const auto& space = *ev.space;
  const auto tight = DetectTightInstance(space, ev.params.r, ev.params.k);
  if (!tight) return NotApplicable(PropId::kP1, "not a two-level block instance with k+1 blocks");
  if (!ev.exact || !ev.exact->optimal) return NotApplicable(PropId::kP1, "optimal structure unavailable: " + ev.exact_note);

  const unsigned k = ev.params.k;
  const Rational n = SizeOf(space.size());
  const Rational lambda = SizeOf(tight->m) / n;
  CheckResult result;
  result.id = PropId::kP1;
  Add(result, "M", "==", Rational(ev.observed.medium_edges), 0);
  Add(result, "T_{k+1} vs n^{k+1} (1 - k lambda) lambda^k", "==", Rational(ev.observed.anticliques_k1),
      Pow(n, k + 1) * (1 - k * lambda) * Pow(lambda, k));
  Add(result, "T_{k+1} vs beta n^{k+1} / (k+1)!", "<=", Rational(ev.observed.anticliques_k1),
      ev.observed.beta * Pow(n, k + 1) / Rational(Factorial(k + 1)));
  Add(result, "n - mu(X*) vs lambda n", "==", n - SizeOf(ev.exact->structure.measure), lambda * n);
  return Finish(std::move(result));
}

void AddP2(CheckResult& result, const FiniteSemimetricSpace& space, const Rational& r, const PointSet& a,
           const std::string& name) {
  if (a.size() < 2 || SubsetDiameter(space, a) > 3 * r) return;
  const PointSet b = MaxCluster(space, a, 2 * r);
  const Rational lhs = SizeOf(MediumEdgesWithin(space, r, a));
  const Rational rhs = Rational(std::max(a.size(), 2 * b.size())) * SizeOf(a.size() - b.size()) / 2;
  Add(result, name, ">=", lhs, rhs);
}

CheckResult CheckP2(const InstanceEvidence& ev) {
  const auto& space = *ev.space;
  CheckResult result;
  result.id = PropId::kP2;
  PointSet all(space.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  AddP2(result, space, ev.params.r, all, "M(X) vs max{|X|, 2|B|} |X \\ B| / 2");
  for (std::size_t i = 0; i < ev.decomposition.parts.size(); ++i) {
    const auto& part = ev.decomposition.parts[i];
    PointSet a;
    std::set_union(part.x.begin(), part.x.end(), part.y.begin(), part.y.end(), std::back_inserter(a));
    AddP2(result, space, ev.params.r, a, "part " + std::to_string(i) + ": M(X_i u Y_i) vs max{|A|, 2|B|} |A \\ B| / 2");
  }
  return Finish(std::move(result));
}

CheckResult CheckP3(const InstanceEvidence& ev) {
  if (ev.observed.alpha <= 0) return NotApplicable(PropId::kP3, "alpha not separated from zero");
  std::size_t bad = 0;
  for (std::size_t i : ev.decomposition.i1) bad += ev.decomposition.parts[i].z.size();
  CheckResult result;
  result.id = PropId::kP3;
  Add(result, "sum_{I1} |Z_i| vs (k+1) beta / alpha n", "<=", SizeOf(bad),
      Rational(ev.params.k + 1) * ev.observed.beta / ev.observed.alpha * SizeOf(ev.observed.n));
  return Finish(std::move(result));
}

CheckResult CheckP4(const InstanceEvidence& ev) {
  const unsigned k = ev.params.k;
  const auto w = SortedSizes(ev.decomposition);
  CheckResult result;
  result.id = PropId::kP4;
  Add(result, "T_{k+1} vs e_{k+1}(W) / (k+1)!", ">=", Rational(ev.observed.anticliques_k1),
      Rational(ElementarySymmetric(std::span<const BigInt>(w), k + 1), Factorial(k + 1)));
  return Finish(std::move(result));
}

CheckResult CheckP5(const InstanceEvidence& ev) {
  const BoundInputs in = BoundInputs::FromObserved(ev.observed);
  const Precondition pre = PreconditionCheck(in);
  if (!pre.ok) return NotApplicable(PropId::kP5, pre.reason);
  const unsigned k = ev.params.k;
  const Rational n = SizeOf(ev.observed.n);
  const Rational lambda = LambdaParam(in);
  const auto w = SortedSizes(ev.decomposition);
  const Rational ek(ElementarySymmetric(std::span<const BigInt>(w), k));
  // The correction sum runs over s >= 1 with k - 2s >= 0 and is empty for k = 1.
  const Rational correction = k >= 2 ? Rational(k) * lambda * Pow(n, k) / (2 * Rational(Factorial(k - 2))) : 0;
  CheckResult result;
  result.id = PropId::kP5;
  Add(result, "T_k vs e_k(W) + k lambda n^k / (2 (k-2)!)", "<=", Rational(ev.observed.anticliques_k), ek + correction);
  Add(result, "e_k(W) vs alpha' n^k / k!", ">=", ek, AlphaPrime(in) * Pow(n, k) / Rational(Factorial(k)));
  return Finish(std::move(result));
}

CheckResult CheckP6(const InstanceEvidence& ev) {
  const BoundInputs in = BoundInputs::FromObserved(ev.observed);
  const Precondition pre = PreconditionCheck(in);
  if (!pre.ok) return NotApplicable(PropId::kP6, pre.reason);
  const Rational alpha_prime = AlphaPrime(in);
  if (alpha_prime <= 0) return NotApplicable(PropId::kP6, "alpha' is not positive");
  const unsigned k = ev.params.k;
  std::size_t head = 0;
  for (std::size_t i = 0; i < std::min<std::size_t>(k, ev.decomposition.sorted_sizes.size()); ++i) {
    head += ev.decomposition.sorted_sizes[i];
  }
  CheckResult result;
  result.id = PropId::kP6;
  Add(result, "sum_{i<=k} W_i vs (1 - (k+1)! beta / alpha') n", ">=", SizeOf(head),
      (1 - Rational(Factorial(k + 1)) * in.beta / alpha_prime) * SizeOf(ev.observed.n));
  return Finish(std::move(result));
}

CheckResult CheckT1(const InstanceEvidence& ev) {
  const BoundInputs in = BoundInputs::FromObserved(ev.observed);
  const PsiResult psi = PsiBound(in);
  if (!psi.applicable) return NotApplicable(PropId::kT1, psi.reason);
  const std::size_t n = ev.observed.n;
  const std::string rhs = Approx(psi.precise * n);
  CheckResult result;
  result.id = PropId::kT1;
  result.inequalities.push_back({"greedy I0 measure vs Psi n (rhs approximate)", ">=", Exact(ev.greedy.measure), rhs,
                                 MeasureMeetsPsi(ev.greedy.measure, n, in, psi)});
  if (ev.exact && ev.exact->optimal) {
    result.inequalities.push_back({"mu(X*) vs Psi n (rhs approximate)", ">=", Exact(ev.exact->structure.measure), rhs,
                                   MeasureMeetsPsi(ev.exact->structure.measure, n, in, psi)});
  }
  return Finish(std::move(result));
}

}  // namespace

const char* ToString(PropId id) {
  switch (id) {
    case PropId::kP1:
      return "P1";
    case PropId::kP2:
      return "P2";
    case PropId::kP3:
      return "P3";
    case PropId::kP4:
      return "P4";
    case PropId::kP5:
      return "P5";
    case PropId::kP6:
      return "P6";
    case PropId::kT1:
      return "T1";
  }
  return "?";
}

PropId ParsePropId(const std::string& text) {
  for (PropId id : kAllProps) {
    if (text == ToString(id)) return id;
  }
  throw std::invalid_argument("unknown proposition id '" + text + "'");
}

const char* ToString(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kPlanted:
      return "planted";
    case GeneratorKind::kTight:
      return "tight";
    case GeneratorKind::kUniform:
      return "uniform";
  }
  return "?";
}

InstanceEvidence CollectEvidence(const FiniteSemimetricSpace& space, const ScaleParams& params,
                                 const VerifyOptions& options) {
  params.Validate();
  InstanceEvidence ev;
  ev.space = &space;
  ev.params = params;
  ev.metric = space.IsMetric();
  ev.observed = ObservedParameters(space, params, options.counting);
  ev.decomposition = GreedyDecompose(space, params);
  ev.greedy = GreedyStructure(ev.decomposition, params.k);
  if (space.size() > options.exact.max_points) {
    ev.exact_note = "n exceeds exact-search limit";
  } else {
    try {
      ev.exact = ExactStructure(space, params, options.exact);
      if (!ev.exact->optimal) ev.exact_note = "exact search hit its node budget";
    } catch (const LimitError& e) {
      ev.exact_note = e.what();
    }
  }
  return ev;
}

CheckResult CheckProposition(const InstanceEvidence& ev, PropId id) {
  // Every statement past P1 is derived through the greedy decomposition,
  // whose neighbourhood bounds need the triangle inequality.
  if (id != PropId::kP1 && !ev.metric) return NotApplicable(id, "triangle inequality fails");
  switch (id) {
    case PropId::kP1:
      return CheckP1(ev);
    case PropId::kP2:
      return CheckP2(ev);
    case PropId::kP3:
      return CheckP3(ev);
    case PropId::kP4:
      return CheckP4(ev);
    case PropId::kP5:
      return CheckP5(ev);
    case PropId::kP6:
      return CheckP6(ev);
    case PropId::kT1:
      return CheckT1(ev);
  }
  throw std::logic_error("unhandled proposition id");
}

CheckResult CheckProposition(const FiniteSemimetricSpace& space, const ScaleParams& params, PropId id,
                             const VerifyOptions& options) {
  return CheckProposition(CollectEvidence(space, params, options), id);
}

TrialInstance MakeTrialInstance(const SuiteConfig& config, std::size_t trial) {
  if (config.max_n < 2) throw std::invalid_argument("max_n must be at least 2");
  if (config.k_min < 1 || config.k_min > config.k_max) throw std::invalid_argument("invalid k range");
  if (config.mix.empty()) throw std::invalid_argument("generator mix is empty");

  Rng rng(MixSeed(config.seed, trial));
  TrialInstance out;
  out.generator = config.mix[trial % config.mix.size()];
  unsigned k = static_cast<unsigned>(rng.Between(config.k_min, config.k_max));
  const Rational r = 1;
  const std::size_t max_n = config.max_n;

  switch (out.generator) {
    case GeneratorKind::kTight: {
      while (k > 1 && k + 1 > max_n) --k;
      TightInstanceSpec spec;
      spec.k = k;
      spec.r = r;
      spec.m = rng.Between(1, max_n / (k + 1));
      spec.m0 = rng.Between(spec.m, max_n - k * spec.m);
      out.space = TightInstance(spec);
      break;
    }
    case GeneratorKind::kPlanted: {
      std::size_t blocks = rng.Between(0, 1) == 0 ? k : rng.Between(1, k + 1);
      blocks = std::min(blocks, max_n);
      const std::size_t n = rng.Between(blocks, max_n);
      std::vector<std::size_t> sizes(blocks, 1);
      for (std::size_t extra = blocks; extra < n; ++extra) ++sizes[rng.Between(0, blocks - 1)];
      static const Rational kNoise[] = {Rational(0), Rational(0), Rational(1, 50), Rational(1, 20), Rational(1, 10)};
      PlantedSpec spec{k, sizes, kNoise[rng.Between(0, 4)], r, rng.Next()};
      out.space = MetricClosure(PlantedInstance(spec));
      break;
    }
    case GeneratorKind::kUniform: {
      const std::size_t n = rng.Between(2, max_n);
      out.space = MetricClosure(UniformRandomSpace(n, 5 * r, rng.Next()));
      break;
    }
  }
  out.params = ScaleParams{r, k};
  return out;
}

VerificationReport RunSuite(const SuiteConfig& config) {
  VerificationReport report;
  report.config = config;
  if (config.trials == 0) return report;
  if (config.max_n > config.options.exact.max_points) {
    throw std::invalid_argument("max_n exceeds the exact-search limit");
  }
  for (std::size_t t = 0; t < config.trials; ++t) {
    const TrialInstance instance = MakeTrialInstance(config, t);
    const InstanceEvidence ev = CollectEvidence(instance.space, instance.params, config.options);
    if (ev.exact && !ev.exact->optimal) ++report.incomplete_exact;
    for (std::size_t p = 0; p < kAllProps.size(); ++p) {
      CheckResult result = CheckProposition(ev, kAllProps[p]);
      if (!result.applicable) continue;
      Tally& tally = report.tallies[p];
      ++tally.applicable;
      if (result.pass) {
        ++tally.passed;
        continue;
      }
      ++tally.failed;
      report.failures.push_back(
          {t, instance.generator, instance.params, std::move(result), io::FormatSpaceText(instance.space)});
    }
  }
  return report;
}

CheckResult ReproduceFailure(const FailureRecord& failure, const VerifyOptions& options) {
  const FiniteSemimetricSpace space = io::ParseSpaceText(failure.space_text, "failure-record");
  return CheckProposition(space, failure.params, failure.result.id, options);
}

}  // namespace clusterbound
