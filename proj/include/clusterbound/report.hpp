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

#ifndef CLUSTERBOUND_REPORT_HPP_
#define CLUSTERBOUND_REPORT_HPP_

#include <string>

#include <json.hpp>

#include "clusterbound/bounds.hpp"
#include "clusterbound/clustering.hpp"
#include "clusterbound/verify.hpp"

// Canonical serialization: objects with sorted keys, two-space indent,
// trailing newline; exact rationals as "p/q" strings and big counts as
// decimal strings, so equal inputs give byte-identical output.
namespace clusterbound::report {

std::string Canonical(const nlohmann::json& doc);

nlohmann::json StructureToJson(const ClusterStructure& structure);

// `r_text` is echoed verbatim; empty means the canonical rendering of r.
nlohmann::json CertificateToJson(const BoundCertificate& cert, const std::string& r_text = "");
nlohmann::json DecompositionToJson(const GreedyDecomposition& decomposition, const std::string& r_text = "");
nlohmann::json ExactToJson(const ExactResult& result, std::size_t n, const ScaleParams& params,
                           const std::string& r_text = "");
nlohmann::json CheckResultToJson(const CheckResult& result);
nlohmann::json ReportToJson(const VerificationReport& report);

std::string CertificateToText(const BoundCertificate& cert);
std::string DecompositionToText(const GreedyDecomposition& decomposition);
std::string ExactToText(const ExactResult& result);
std::string ReportToText(const VerificationReport& report);

}  // namespace clusterbound::report

#endif  // CLUSTERBOUND_REPORT_HPP_
