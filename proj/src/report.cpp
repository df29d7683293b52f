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

#include "clusterbound/report.hpp"

#include <cstdio>
#include <sstream>

namespace clusterbound::report {
namespace {

using nlohmann::json;

json Fraction(const Rational& value) { return ToFractionString(value); }

std::string RText(const Rational& r, const std::string& r_text) {
  return r_text.empty() ? ToCanonicalString(r) : r_text;
}

std::string Fixed(double value, int digits = 6) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

std::string JoinPoints(const PointSet& points) {
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i) out += (i ? "," : "") + std::to_string(points[i]);
  return out + "}";
}

}  // namespace

std::string Canonical(const json& doc) { return doc.dump(2) + "\n"; }

json StructureToJson(const ClusterStructure& structure) {
  json clusters = json::array();
  for (const PointSet& c : structure.clusters) clusters.push_back(c);
  return json{{"clusters", std::move(clusters)}, {"measure", structure.measure}, {"order", structure.order}};
}

json CertificateToJson(const BoundCertificate& cert, const std::string& r_text) {
  json doc;
  doc["n"] = cert.n;
  doc["r"] = RText(cert.params.r, r_text);
  doc["k"] = cert.params.k;
  doc["counts"] = {{"M", cert.observed.medium_edges.str()},
                   {"Tk", cert.observed.anticliques_k.str()},
                   {"Tk1", cert.observed.anticliques_k1.str()}};
  doc["observed"] = {{"delta", Fraction(cert.observed.delta)},
                     {"beta", Fraction(cert.observed.beta)},
                     {"alpha", Fraction(cert.observed.alpha)}};
  doc["lambda"] = cert.lambda ? json(Fraction(*cert.lambda)) : json(nullptr);
  doc["alphaPrime"] = cert.alpha_prime ? json(Fraction(*cert.alpha_prime)) : json(nullptr);
  doc["precondition"] = cert.precondition.ok;
  doc["preconditionDetail"] = {{"lhs", cert.precondition.ok || cert.observed.alpha > 0
                                           ? json(Fraction(cert.precondition.lhs))
                                           : json(nullptr)},
                               {"rhs", Fraction(cert.precondition.rhs)},
                               {"reason", cert.precondition.reason}};
  doc["psi"] = cert.psi.applicable ? json(cert.psi.value) : json(nullptr);
  doc["psiDetail"] = {{"applicable", cert.psi.applicable},
                      {"vacuous", cert.psi.vacuous},
                      {"reason", cert.psi.reason},
                      {"penalty", cert.psi.applicable ? json(Fraction(cert.psi.penalty)) : json(nullptr)}};
  doc["legacy"] = cert.legacy;

  json greedy = StructureToJson(cert.greedy);
  greedy["valid"] = cert.greedy_valid;
  doc["greedy"] = std::move(greedy);

  json exact = {{"status", cert.exact_status}, {"note", cert.exact_note}};
  if (cert.exact) {
    exact["measure"] = cert.exact->structure.measure;
    exact["optimal"] = cert.exact->optimal;
    exact["clusters"] = StructureToJson(cert.exact->structure)["clusters"];
    exact["valid"] = cert.exact_valid;
  } else {
    exact["measure"] = nullptr;
    exact["optimal"] = false;
  }
  doc["exact"] = std::move(exact);

  json verdicts = json::array();
  for (const Verdict& v : cert.verdicts) {
    verdicts.push_back({{"name", v.name}, {"applicable", v.applicable}, {"holds", v.holds}, {"detail", v.detail}});
  }
  doc["verdicts"] = std::move(verdicts);
  return doc;
}

json DecompositionToJson(const GreedyDecomposition& d, const std::string& r_text) {
  json parts = json::array();
  for (const DecompositionPart& p : d.parts) {
    json matching = json::array();
    for (const auto& [a, b] : p.matching) matching.push_back({a, b});
    parts.push_back({{"Z", p.z},
                     {"X", p.x},
                     {"Y", p.y},
                     {"U", p.u},
                     {"matching", std::move(matching)},
                     {"M", p.medium_edges},
                     {"L", p.long_edges}});
  }
  return json{{"n", d.n},       {"r", RText(d.r, r_text)},    {"k", d.k},
              {"delta", Fraction(d.delta)}, {"parts", std::move(parts)}, {"W", d.sorted_sizes},
              {"I0", d.i0},     {"I1", d.i1},                 {"I2", d.i2},
              {"lambdaCount", d.lambda_count}};
}

json ExactToJson(const ExactResult& result, std::size_t n, const ScaleParams& params, const std::string& r_text) {
  json doc = StructureToJson(result.structure);
  doc["n"] = n;
  doc["r"] = RText(params.r, r_text);
  doc["k"] = params.k;
  doc["optimal"] = result.optimal;
  doc["nodes"] = result.nodes;
  doc["gap"] = n - result.structure.measure;
  return doc;
}

json CheckResultToJson(const CheckResult& result) {
  json inequalities = json::array();
  for (const Inequality& q : result.inequalities) {
    inequalities.push_back(
        {{"name", q.name}, {"relation", q.relation}, {"lhs", q.lhs}, {"rhs", q.rhs}, {"holds", q.holds}});
  }
  json doc = {{"prop", ToString(result.id)},
              {"applicable", result.applicable},
              {"reason", result.reason},
              {"inequalities", std::move(inequalities)}};
  doc["pass"] = result.applicable ? json(result.pass) : json(nullptr);
  doc["lhs"] = result.applicable ? json(result.lhs) : json(nullptr);
  doc["rhs"] = result.applicable ? json(result.rhs) : json(nullptr);
  return doc;
}

json ReportToJson(const VerificationReport& report) {
  json mix = json::array();
  for (GeneratorKind g : report.config.mix) mix.push_back(ToString(g));
  json tallies = json::object();
  for (std::size_t p = 0; p < kAllProps.size(); ++p) {
    const Tally& t = report.tallies[p];
    tallies[ToString(kAllProps[p])] = {{"applicable", t.applicable}, {"passed", t.passed}, {"failed", t.failed}};
  }
  json failures = json::array();
  for (const FailureRecord& f : report.failures) {
    failures.push_back({{"trial", f.trial},
                        {"generator", ToString(f.generator)},
                        {"r", ToCanonicalString(f.params.r)},
                        {"k", f.params.k},
                        {"result", CheckResultToJson(f.result)},
                        {"space", f.space_text}});
  }
  return json{{"config",
               {{"seed", report.config.seed},
                {"trials", report.config.trials},
                {"maxN", report.config.max_n},
                {"kMin", report.config.k_min},
                {"kMax", report.config.k_max},
                {"mix", std::move(mix)}}},
              {"tallies", std::move(tallies)},
              {"failures", std::move(failures)},
              {"totalFailures", report.failures.size()},
              {"incompleteExact", report.incomplete_exact}};
}

std::string CertificateToText(const BoundCertificate& cert) {
  std::ostringstream out;
  const auto& o = cert.observed;
  out << "n = " << cert.n << ", r = " << ToCanonicalString(cert.params.r) << ", k = " << cert.params.k << "\n";
  out << "counts      M = " << o.medium_edges << ", T_k = " << o.anticliques_k << ", T_{k+1} = " << o.anticliques_k1
      << "\n";
  out << "observed    delta = " << ToFractionString(o.delta) << ", beta = " << ToFractionString(o.beta)
      << ", alpha = " << ToFractionString(o.alpha) << "\n";
  out << "precondition " << (cert.precondition.ok ? "holds" : "fails");
  if (!cert.precondition.reason.empty()) out << " (" << cert.precondition.reason << ")";
  out << "\n";
  if (cert.psi.applicable) {
    out << "psi         " << Fixed(cert.psi.value) << (cert.psi.vacuous ? " (vacuous)" : "") << "\n";
  } else {
    out << "psi         n/a (" << cert.psi.reason << ")\n";
  }
  out << "legacy      " << Fixed(cert.legacy) << "\n";
  out << "greedy      measure " << cert.greedy.measure << (cert.greedy_valid ? "" : " INVALID") << "\n";
  if (cert.exact) {
    out << "exact       measure " << cert.exact->structure.measure << " (" << cert.exact_status << ")\n";
  } else {
    out << "exact       " << cert.exact_status << " (" << cert.exact_note << ")\n";
  }
  out << "verdicts\n";
  for (const Verdict& v : cert.verdicts) {
    // An unmet precondition is information about the instance, not a failure.
    const char* failed = v.name == "precondition" ? "[no]  " : "[FAIL]";
    out << "  " << (v.applicable ? (v.holds ? "[ok]  " : failed) : "[n/a] ") << " " << v.name << "\n";
  }
  return out.str();
}

std::string DecompositionToText(const GreedyDecomposition& d) {
  std::ostringstream out;
  out << "greedy decomposition: n = " << d.n << ", r = " << ToCanonicalString(d.r) << ", " << d.parts.size()
      << " parts\n";
  out << "  i  |Z|  |X|  |Y|  |U|    M    L  Z\n";
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& p = d.parts[i];
    char line[96];
    std::snprintf(line, sizeof line, "%3zu %4zu %4zu %4zu %4zu %4zu %4zu  ", i, p.z.size(), p.x.size(), p.y.size(),
                  p.u.size(), p.medium_edges, p.long_edges);
    out << line << JoinPoints(p.z) << "\n";
  }
  out << "I0 = " << JoinPoints(d.i0) << "  I1 = " << JoinPoints(d.i1) << "  I2 = " << JoinPoints(d.i2) << "\n";
  return out.str();
}

std::string ExactToText(const ExactResult& result) {
  std::ostringstream out;
  out << "measure " << result.structure.measure << (result.optimal ? " (optimal)" : " (node budget hit)") << "\n";
  for (std::size_t c = 0; c < result.structure.clusters.size(); ++c) {
    out << "  cluster " << c << ": " << JoinPoints(result.structure.clusters[c]) << "\n";
  }
  return out.str();
}

std::string ReportToText(const VerificationReport& report) {
  std::ostringstream out;
  out << "seed " << report.config.seed << ", trials " << report.config.trials << ", max n " << report.config.max_n
      << ", k in [" << report.config.k_min << "," << report.config.k_max << "]\n";
  out << "prop  applicable  passed  failed\n";
  for (std::size_t p = 0; p < kAllProps.size(); ++p) {
    const Tally& t = report.tallies[p];
    char line[96];
    std::snprintf(line, sizeof line, "%-4s  %10zu  %6zu  %6zu\n", ToString(kAllProps[p]), t.applicable, t.passed,
                  t.failed);
    out << line;
  }
  out << "failures: " << report.failures.size() << "\n";
  return out.str();
}

}  // namespace clusterbound::report
