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

#include "clusterbound/bounds.hpp"

#include <boost/math/constants/constants.hpp>

namespace clusterbound {
namespace {

Float50 SqrtOf(const Rational& value) { return boost::multiprecision::sqrt(ToFloat50(value)); }

}  // namespace

Rational LambdaParam(const BoundInputs& in) {
  if (in.alpha == 0) throw UndefinedParameter("lambda undefined: alpha = 0");
  const Rational k1(in.k + 1);
  return k1 * in.delta / 2 + k1 * k1 * in.beta * in.beta / (2 * in.alpha * in.alpha);
}

Rational AlphaPrime(const BoundInputs& in) {
  const Rational k(in.k);
  return in.alpha - LambdaParam(in) * k * k * k / 2;
}

Precondition PreconditionCheck(const BoundInputs& in) {
  Precondition out;
  const Rational k1(in.k + 1);
  out.rhs = Rational(2) / (k1 * k1 * k1);
  if (in.alpha <= 0) {
    out.ok = false;
    out.reason = "alpha not separated from zero";
    return out;
  }
  out.lhs = in.delta + k1 * in.beta * in.beta / (in.alpha * in.alpha);
  out.ok = out.lhs <= out.rhs;
  if (!out.ok) out.reason = "delta + (k+1) beta^2 / alpha^2 exceeds 2/(k+1)^3";
  return out;
}

PsiResult PsiBound(const BoundInputs& in) {
  PsiResult out;
  const Precondition pre = PreconditionCheck(in);
  if (!pre.ok) {
    out.reason = pre.reason;
    return out;
  }
  out.lambda = LambdaParam(in);
  out.alpha_prime = AlphaPrime(in);
  if (out.alpha_prime <= 0) {
    out.reason = "alpha - k^3 lambda / 2 is not positive";
    return out;
  }
  out.applicable = true;
  out.penalty = Rational(Factorial(in.k) * (in.k + 2)) * in.beta / out.alpha_prime;
  out.precise = Float50(1) - SqrtOf(in.delta) * (2 * in.k + 1) - ToFloat50(out.penalty);
  out.value = out.precise.convert_to<double>();
  out.vacuous = out.precise <= 0;
  return out;
}

Float50 LegacyBoundPrecise(const Rational& beta, const Rational& delta, unsigned k) {
  const Float50 e = boost::math::constants::e<Float50>();
  const Float50 coefficient = Float50(k) * (e + 1) + 1;
  const Float50 root = beta == 0 ? Float50(0) : boost::multiprecision::pow(ToFloat50(beta), Float50(1) / (k + 1));
  return Float50(1) - SqrtOf(delta) * (2 * k + 1) - coefficient * root;
}

double LegacyBound(const Rational& beta, const Rational& delta, unsigned k) {
  return LegacyBoundPrecise(beta, delta, k).convert_to<double>();
}

bool MeasureMeetsPsi(std::size_t measure, std::size_t n, const BoundInputs& in, const PsiResult& psi) {
  if (!psi.applicable) return false;
  // measure >= (1 - sqrt(delta)(2k+1) - penalty) n
  //   <=>  sqrt(delta)(2k+1) n >= (1 - penalty) n - measure =: gap
  const Rational nn(n);
  const Rational gap = (1 - psi.penalty) * nn - Rational(measure);
  if (gap <= 0) return true;
  const Rational scale(2 * in.k + 1);
  return in.delta * scale * scale * nn * nn >= gap * gap;
}

BoundCertificate BuildCertificate(const FiniteSemimetricSpace& space, const ScaleParams& params,
                                  const CertificateOptions& options) {
  params.Validate();
  BoundCertificate cert;
  cert.n = space.size();
  cert.params = params;
  cert.observed = ObservedParameters(space, params, options.counting);

  const BoundInputs inputs = BoundInputs::FromObserved(cert.observed);
  if (inputs.alpha > 0) {
    cert.lambda = LambdaParam(inputs);
    cert.alpha_prime = AlphaPrime(inputs);
  }
  cert.precondition = PreconditionCheck(inputs);
  cert.psi = PsiBound(inputs);
  cert.legacy = LegacyBound(inputs.beta, inputs.delta, inputs.k);

  const GreedyDecomposition decomposition = GreedyDecompose(space, params);
  cert.greedy = GreedyStructure(decomposition, params.k);
  cert.greedy_valid = ValidateStructure(space, cert.greedy, params).valid();

  if (!options.run_exact) {
    cert.exact_note = "exact search disabled";
  } else if (space.size() > options.exact.max_points) {
    cert.exact_note = "n = " + std::to_string(space.size()) + " exceeds exact-search limit " +
                      std::to_string(options.exact.max_points);
  } else {
    try {
      cert.exact = ExactStructure(space, params, options.exact);
      cert.exact_status = cert.exact->optimal ? "optimal" : "limit";
      if (!cert.exact->optimal) cert.exact_note = "node budget exhausted; best structure found so far";
      cert.exact_valid = ValidateStructure(space, cert.exact->structure, params).valid();
    } catch (const LimitError& e) {
      cert.exact_note = e.what();
    }
  }

  auto verdict = [&](std::string name, bool applicable, bool holds, std::string detail) {
    cert.verdicts.push_back({std::move(name), applicable, applicable && holds, std::move(detail)});
  };
  verdict("precondition", true, cert.precondition.ok,
          cert.precondition.ok ? "" : cert.precondition.reason);
  verdict("greedy structure valid", true, cert.greedy_valid, "");
  verdict("greedy measure >= psi * n", cert.psi.applicable,
          MeasureMeetsPsi(cert.greedy.measure, cert.n, inputs, cert.psi), cert.psi.reason);
  const bool have_exact = cert.exact.has_value();
  verdict("exact structure valid", have_exact, cert.exact_valid, cert.exact_note);
  verdict("exact measure >= greedy measure", have_exact && cert.exact->optimal,
          have_exact && cert.exact->structure.measure >= cert.greedy.measure, cert.exact_note);
  verdict("exact measure >= psi * n", have_exact && cert.psi.applicable,
          have_exact && MeasureMeetsPsi(cert.exact->structure.measure, cert.n, inputs, cert.psi),
          cert.psi.applicable ? cert.exact_note : cert.psi.reason);
  verdict("psi >= legacy bound", cert.psi.applicable,
          cert.psi.precise >= LegacyBoundPrecise(inputs.beta, inputs.delta, inputs.k), cert.psi.reason);
  return cert;
}

}  // namespace clusterbound
