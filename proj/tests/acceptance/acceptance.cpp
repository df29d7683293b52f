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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "clusterbound/bounds.hpp"
#include "clusterbound/clustering.hpp"
#include "clusterbound/generators.hpp"
#include "clusterbound/kernels.hpp"
#include "clusterbound/report.hpp"
#include "clusterbound/stats.hpp"
#include "clusterbound/verify.hpp"
#include "oracles.hpp"

namespace cb = clusterbound;
using cb::Rational;

namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) { return std::chrono::duration<double>(Clock::now() - since).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void Require(bool condition, const std::string& what) {
    if (!condition && pass) detail << "first failure: " << what << "; ";
    pass = pass && condition;
  }
};

int failures = 0;

void Criterion(const std::string& name, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = Clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail << "exception: " << e.what() << "; ";
  }
  std::printf("%s  %-28s %s(%.3f s)\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.detail.str().c_str(),
              Seconds(start));
  std::fflush(stdout);
  failures += out.pass ? 0 : 1;
}

std::vector<std::vector<std::size_t>> Clusters(const cb::ClusterStructure& s) {
  return {s.clusters.begin(), s.clusters.end()};
}

void TightWitness(Outcome& out) {
  const auto start = Clock::now();
  const auto s = cb::TightInstance({2, 3, 3, 1});
  const cb::ScaleParams p{1, 2};
  const auto observed = cb::ObservedParameters(s, p);
  const auto exact = cb::ExactStructure(s, p);
  const Rational lambda(1, 3), n(9);
  const Rational identity = cb::Pow(n, 3) * (1 - 2 * lambda) * cb::Pow(lambda, 2);
  const double elapsed = Seconds(start);
  out.Require(observed.medium_edges == 0, "M = 0");
  out.Require(observed.anticliques_k1 == 27, "T_3 = 27");
  out.Require(Rational(observed.anticliques_k1) == identity, "T_3 = n^3 (1 - k lambda) lambda^k");
  out.Require(exact.optimal && exact.structure.measure == 6, "exact measure 6");
  out.Require(9 - exact.structure.measure == 3 && lambda * n == 3, "gap 3 = lambda n");
  out.Require(elapsed < 1.0, "runtime < 1 s");
  out.detail << "M=" << observed.medium_edges << " T3=" << observed.anticliques_k1 << " mu*=" << exact.structure.measure
             << " gap=" << 9 - exact.structure.measure << " ";
}

void TightRange(Outcome& out) {
  std::size_t cases = 0;
  cb::VerifyOptions options;
  options.exact.max_points = 20;
  for (unsigned k = 1; k <= 3; ++k) {
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t m0 = m; m0 <= 5; ++m0) {
        ++cases;
        const auto s = cb::TightInstance({k, m, m0, 1});
        const std::string tag = "(k,m,m0)=(" + std::to_string(k) + "," + std::to_string(m) + "," +
                                std::to_string(m0) + ")";
        const std::size_t n = s.size();
        // Brute-force counts.
        out.Require(cb::oracle::MediumEdges(s, 1) == 0, tag + " M = 0");
        const std::uint64_t t = cb::oracle::Anticliques(s, 1, k + 1);
        out.Require(t == m0 * static_cast<std::uint64_t>(std::pow(m, k)), tag + " T_{k+1} = m0 m^k");
        // Exact optimum and the proof identities.
        const auto exact = cb::ExactStructure(s, {1, k}, options.exact);
        out.Require(exact.optimal && exact.structure.measure == n - m, tag + " mu* = n - min(m, m0)");
        const auto check = cb::CheckProposition(s, {1, k}, cb::PropId::kP1, options);
        out.Require(check.applicable && check.pass, tag + " identities");
      }
    }
  }
  out.detail << cases << " instances ";
}

void Suite(Outcome& out) {
  cb::SuiteConfig config;  // seed 42, 200 trials, n <= 10, k in 1..3
  const auto start = Clock::now();
  const auto report = cb::RunSuite(config);
  const double elapsed = Seconds(start);
  std::size_t applicable = 0;
  for (std::size_t p = 1; p < cb::kAllProps.size(); ++p) applicable += report.tallies[p].applicable;
  out.Require(report.failures.empty(), std::to_string(report.failures.size()) + " failures");
  out.Require(report.incomplete_exact == 0, "exact search completed on every trial");
  out.Require(elapsed < 300.0, "runtime < 5 min");
  for (std::size_t p = 0; p < cb::kAllProps.size(); ++p) {
    out.detail << cb::ToString(cb::kAllProps[p]) << "=" << report.tallies[p].passed << "/"
               << report.tallies[p].applicable << " ";
  }
  out.Require(applicable > 0, "some checks applicable");
}

void OracleEquivalence(Outcome& out) {
  cb::Rng rng(20260);
  std::size_t cases = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t n = 1 + rng.Between(0, 7);
    const unsigned k = 1 + static_cast<unsigned>(rng.Between(0, 2));
    const auto s = cb::oracle::RandomSpace(rng, n, 40, rep % 2 == 0);
    const cb::ScaleParams p{Rational(static_cast<long>(rng.Between(2, 12)), 8), k};
    const auto exact = cb::ExactStructure(s, p);
    const std::size_t brute = cb::oracle::ExactMeasure(s, p.r, k);
    out.Require(exact.optimal && exact.structure.measure == brute, "case " + std::to_string(rep));
    ++cases;
  }
  out.detail << cases << " cases, n <= 8 ";
}

void GreedyDominance(Outcome& out) {
  cb::Rng rng(777);
  std::size_t cases = 0;
  auto check = [&](const cb::FiniteSemimetricSpace& s, const cb::ScaleParams& p, const std::string& tag) {
    const auto exact = cb::ExactStructure(s, p);
    if (!exact.optimal) return;
    const auto greedy = cb::GreedyStructure(cb::GreedyDecompose(s, p), p.k);
    out.Require(greedy.measure <= exact.structure.measure, tag + " greedy <= exact");
    out.Require(cb::ValidateStructure(s, greedy, p).valid(), tag + " greedy valid");
    out.Require(cb::ValidateStructure(s, exact.structure, p).valid(), tag + " exact valid");
    out.Require(cb::oracle::ValidStructure(s, Clusters(greedy), p.r), tag + " greedy valid (oracle)");
    out.Require(cb::oracle::ValidStructure(s, Clusters(exact.structure), p.r), tag + " exact valid (oracle)");
    ++cases;
  };
  for (int rep = 0; rep < 200; ++rep) {
    const auto s = cb::oracle::RandomSpace(rng, 1 + rng.Between(0, 11), 40, rep % 2 == 0);
    check(s, {Rational(static_cast<long>(rng.Between(2, 12)), 8), 1 + static_cast<unsigned>(rng.Between(0, 2))},
          "random " + std::to_string(rep));
  }
  cb::SuiteConfig config;
  for (std::size_t t = 0; t < config.trials; ++t) {
    const auto trial = cb::MakeTrialInstance(config, t);
    check(trial.space, trial.params, "suite " + std::to_string(t));
  }
  out.detail << cases << " instances ";
}

void BoundReproduction(Outcome& out) {
  const Rational tiny(1, 10000);
  const auto psi = cb::PsiBound({Rational(1, 2), tiny, tiny, 2});
  const double legacy = cb::LegacyBound(tiny, tiny, 2);
  out.Require(psi.applicable && std::fabs(psi.value - 0.94840) <= 1e-4, "Psi = 0.94840 +- 1e-4");
  out.Require(std::fabs(legacy - 0.55841) <= 1e-3, "legacy = 0.55841 +- 1e-3");
  out.Require(psi.value > legacy, "Psi > legacy");
  char buffer[96];
  std::snprintf(buffer, sizeof buffer, "Psi=%.6f legacy=%.6f ", psi.value, legacy);
  out.detail << buffer;

  std::size_t points = 0, applicable = 0;
  for (unsigned k = 1; k <= 4; ++k) {
    for (int a = 30; a <= 100; a += 5) {
      for (int b = 0; b <= 10; ++b) {
        for (int d = 0; d <= 10; ++d) {
          ++points;
          const cb::BoundInputs in{Rational(a, 100), Rational(b, 10000), Rational(d, 10000), k};
          const auto p = cb::PsiBound(in);
          if (!p.applicable) continue;
          ++applicable;
          out.Require(p.precise >= cb::LegacyBoundPrecise(in.beta, in.delta, k),
                      "grid k=" + std::to_string(k) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                          " d=" + std::to_string(d));
        }
      }
    }
  }
  out.detail << "grid " << applicable << "/" << points << " with precondition ";
}

void DiscretizationExamples(Outcome& out) {
  const auto s = cb::FiniteSemimetricSpace::FromRows({"a", "b", "c"}, {{0, 1, 2}, {1, 0, 1}, {2, 1, 0}});
  auto run = [&](std::vector<Rational> weights) {
    const cb::WeightedFiniteSpace w{s, std::move(weights)};
    return cb::Uniformize(w, cb::EpsilonPartition(w, Rational(1, 100)), Rational(1, 100));
  };
  using Sizes = std::vector<std::size_t>;
  out.Require(run({Rational(1, 2), Rational(3, 10), Rational(1, 5)}).multiplicities == Sizes{5, 3, 2}, "(5,3,2)");
  out.Require(run({1, 1, 1}).multiplicities == Sizes{1, 1, 1}, "(1,1,1)");
  const auto third = run({Rational(1, 3), Rational(1, 3), Rational(1, 3)});
  out.Require(third.q == std::vector<Rational>(3, Rational(33, 100)) && third.multiplicities == Sizes{1, 1, 1},
              "q = 0.33, (1,1,1)");
}

void Sandwich(Outcome& out) {
  cb::Rng rng(4242);
  std::size_t transfer_checks = 0;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 1 + rng.Between(0, 7);
    const auto base = cb::oracle::RandomSpace(rng, n, 24, rep % 2 == 0);
    std::vector<Rational> weights(n);
    for (auto& x : weights) {
      x = Rational(static_cast<long>(rng.Between(1, 30)), static_cast<long>(rng.Between(1, 11)));
    }
    const cb::WeightedFiniteSpace w{base, weights};
    const Rational eps(static_cast<long>(rng.Between(1, 25)), 100);
    const auto parts = cb::EpsilonPartition(w, eps);
    const std::string tag = "space " + std::to_string(rep);
    for (const auto& part : parts) out.Require(cb::oracle::Diameter(base, part) <= eps, tag + " part diameter");
    const auto u = cb::Uniformize(w, parts, eps);
    const Rational total = w.TotalWeight();
    const Rational big_n(static_cast<long>(u.total));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const Rational b(static_cast<long>(u.multiplicities[i]));
      out.Require((1 - eps) * u.part_measures[i] * big_n / total <= b, tag + " lower sandwich");
      out.Require(b <= u.part_measures[i] * big_n / ((1 - eps) * total), tag + " upper sandwich");
    }
    if (u.total <= 20) {
      const auto m = u.Materialize();
      for (unsigned k = 1; k <= 3; ++k) {
        const Rational r(static_cast<long>(rng.Between(1, 16)), 8);
        const std::uint64_t t = cb::oracle::Anticliques(m, r, k);
        out.Require(Rational(t) >= cb::Pow((1 - eps) * big_n / total, k) * u.WeightedPartAnticliques(r, k),
                    tag + " anticlique transfer");
        ++transfer_checks;
      }
    }
  }
  out.detail << "50 spaces, " << transfer_checks << " transfer checks ";
}

void Determinism(Outcome& out) {
  cb::SuiteConfig config;
  config.trials = 60;
  const std::string a = cb::report::Canonical(cb::report::ReportToJson(cb::RunSuite(config)));
  const std::string b = cb::report::Canonical(cb::report::ReportToJson(cb::RunSuite(config)));
  out.Require(a == b, "suite report byte-identical");
  for (std::size_t t = 0; t < 20; ++t) {
    const auto trial = cb::MakeTrialInstance(config, t);
    const auto x = cb::report::Canonical(cb::report::CertificateToJson(cb::BuildCertificate(trial.space, trial.params)));
    const auto y = cb::report::Canonical(cb::report::CertificateToJson(cb::BuildCertificate(trial.space, trial.params)));
    out.Require(x == y, "certificate byte-identical");
  }
}

}  // namespace

int main() {
  std::printf("kernels: %s\n", std::string(cb::kernels::Active().name).c_str());
  Criterion("tight-witness", TightWitness);
  Criterion("tight-identities-range", TightRange);
  Criterion("verification-suite", Suite);
  Criterion("oracle-equivalence", OracleEquivalence);
  Criterion("greedy-dominance", GreedyDominance);
  Criterion("bound-reproduction", BoundReproduction);
  Criterion("discretization-examples", DiscretizationExamples);
  Criterion("sandwich-and-partition", Sandwich);
  Criterion("determinism", Determinism);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}
