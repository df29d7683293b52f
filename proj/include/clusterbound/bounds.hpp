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

#ifndef CLUSTERBOUND_BOUNDS_HPP_
#define CLUSTERBOUND_BOUNDS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "clusterbound/clustering.hpp"
#include "clusterbound/rational.hpp"
#include "clusterbound/space.hpp"
#include "clusterbound/stats.hpp"

namespace clusterbound {

class UndefinedParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct BoundInputs {
  Rational alpha;
  Rational beta;
  Rational delta;
  unsigned k = 1;

  static BoundInputs FromObserved(const ObservedParams& observed) {
    return {observed.alpha, observed.beta, observed.delta, observed.k};
  }
};

// lambda = (k+1) delta / 2 + (k+1)^2 beta^2 / (2 alpha^2). Throws
// UndefinedParameter when alpha == 0.
Rational LambdaParam(const BoundInputs& in);

// alpha' = alpha - lambda k^3 / 2.
Rational AlphaPrime(const BoundInputs& in);

struct Precondition {
  bool ok = false;
  Rational lhs;  // delta + (k+1) beta^2 / alpha^2
  Rational rhs;  // 2 / (k+1)^3
  std::string reason;
};

Precondition PreconditionCheck(const BoundInputs& in);

struct PsiResult {
  bool applicable = false;
  std::string reason;  // why not applicable
  Rational lambda;
  Rational alpha_prime;
  Rational penalty;  // k!(k+2) beta / alpha'
  Float50 precise;
  double value = 0.0;
  bool vacuous = false;  // value <= 0
};

// Psi = 1 - sqrt(delta)(2k+1) - k!(k+2) beta / alpha'. Not applicable when
// the precondition fails or alpha' <= 0.
PsiResult PsiBound(const BoundInputs& in);

// 1 - sqrt(delta)(2k+1) - (k(e+1)+1) beta^{1/(k+1)}.
double LegacyBound(const Rational& beta, const Rational& delta, unsigned k);
Float50 LegacyBoundPrecise(const Rational& beta, const Rational& delta, unsigned k);

// Exact decision of measure >= Psi * n for an applicable Psi: isolates the
// sqrt(delta) term and compares squares of rationals.
bool MeasureMeetsPsi(std::size_t measure, std::size_t n, const BoundInputs& in, const PsiResult& psi);

struct Verdict {
  std::string name;
  bool applicable = false;
  bool holds = false;
  std::string detail;
};

struct CertificateOptions {
  bool run_exact = true;
  ExactOptions exact;
  CountOptions counting;
};

struct BoundCertificate {
  std::size_t n = 0;
  ScaleParams params;
  ObservedParams observed;
  std::optional<Rational> lambda;
  std::optional<Rational> alpha_prime;
  Precondition precondition;
  PsiResult psi;
  double legacy = 0.0;
  ClusterStructure greedy;
  bool greedy_valid = false;
  // "optimal", "limit" (node budget hit), "skipped" (disabled or n too large).
  std::string exact_status = "skipped";
  std::string exact_note;
  std::optional<ExactResult> exact;
  bool exact_valid = false;
  std::vector<Verdict> verdicts;
};

BoundCertificate BuildCertificate(const FiniteSemimetricSpace& space, const ScaleParams& params,
                                  const CertificateOptions& options = {});

}  // namespace clusterbound

#endif  // CLUSTERBOUND_BOUNDS_HPP_
