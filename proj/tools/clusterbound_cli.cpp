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

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clusterbound/bounds.hpp"
#include "clusterbound/clustering.hpp"
#include "clusterbound/generators.hpp"
#include "clusterbound/report.hpp"
#include "clusterbound/space_io.hpp"
#include "clusterbound/verify.hpp"

namespace cb = clusterbound;
using nlohmann::json;

namespace {

// Bad user input of any kind; reported as "clusterbound: <what>" and exit 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  std::string output;
  std::string format = "json";
  std::string r_text;
  unsigned k = 1;
};

cb::Rational ParsePositive(const std::string& flag, const std::string& text) {
  cb::Rational value;
  try {
    value = cb::ParseRational(text);
  } catch (const std::exception& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (value <= 0) throw UsageError(flag + " must be positive, got " + text);
  return value;
}

cb::ScaleParams Params(const Common& c) {
  if (c.r_text.empty()) throw UsageError("--r is required");
  if (c.k < 1) throw UsageError("--k must be at least 1");
  return {ParsePositive("--r", c.r_text), c.k};
}

cb::io::LoadedSpace Load(const Common& c) {
  if (c.input.empty()) throw UsageError("--input is required");
  return cb::io::LoadSpaceFile(c.input);
}

void Emit(const Common& c, const std::string& text) {
  if (c.output.empty() || c.output == "-") {
    std::cout << text;
  } else {
    cb::io::WriteTextFile(c.output, text);
  }
}

void EmitDocument(const Common& c, const json& doc, const std::string& table) {
  Emit(c, c.format == "text" ? table : cb::report::Canonical(doc));
}

void EmitSpace(const Common& c, const cb::FiniteSemimetricSpace& space, json extra = json::object()) {
  if (c.format == "text") {
    Emit(c, cb::io::FormatSpaceText(space));
    return;
  }
  json doc = cb::io::SpaceToJson(space);
  for (auto& [key, value] : extra.items()) doc[key] = value;
  Emit(c, cb::report::Canonical(doc));
}

std::vector<std::string> SplitCsv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

void AddCommon(CLI::App* cmd, Common& c, bool needs_input, bool needs_scale) {
  if (needs_input) cmd->add_option("--input,-i", c.input, "Space file (text matrix or JSON)");
  if (needs_scale) {
    cmd->add_option("--r", c.r_text, "Scale r > 0 (decimal or p/q)");
    cmd->add_option("--k", c.k, "Structure order k >= 1");
  }
  cmd->add_option("--output,-o", c.output, "Output path (default stdout)");
  cmd->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "text"}));
}

int Run(int argc, char** argv) {
  CLI::App app{"Cluster-structure analysis of finite semimetric spaces"};
  app.require_subcommand(1, 1);

  Common c;
  std::size_t exact_limit = cb::ExactOptions{}.max_points;
  std::uint64_t exact_nodes = cb::ExactOptions{}.max_nodes;

  auto* analyze = app.add_subcommand("analyze", "Full bound certificate for one space");
  AddCommon(analyze, c, true, true);
  bool no_exact = false;
  analyze->add_option("--exact-limit", exact_limit, "Largest n for exact search");
  analyze->add_flag("--no-exact", no_exact, "Skip exact search");

  auto* greedy = app.add_subcommand("greedy", "Greedy decomposition dump");
  AddCommon(greedy, c, true, true);

  auto* exact = app.add_subcommand("exact", "Optimal cluster structure by exhaustive search");
  AddCommon(exact, c, true, true);
  exact->add_option("--exact-limit", exact_limit, "Largest n for exact search");
  exact->add_option("--max-nodes", exact_nodes, "Search node budget");

  auto* generate = app.add_subcommand("generate", "Emit a generated space");
  AddCommon(generate, c, false, true);
  std::string kind = "tight";
  std::size_t m = 1, m0 = 1;
  std::string sizes_text;
  std::string noise_text = "0";
  std::uint64_t seed = 42;
  std::string config_path;
  generate->add_option("--kind", kind, "Generator")->check(CLI::IsMember({"tight", "planted"}));
  generate->add_option("--m", m, "Tight: size of blocks B_1..B_k");
  generate->add_option("--m0", m0, "Tight: size of block B_0");
  generate->add_option("--sizes", sizes_text, "Planted: comma-separated block sizes");
  generate->add_option("--noise", noise_text, "Planted: fraction of pairs made medium");
  generate->add_option("--seed", seed, "Random seed");
  generate->add_option("--config", config_path, "JSON generator spec (overrides flags)");

  auto* discretize = app.add_subcommand("discretize", "Uniformize a weighted space");
  AddCommon(discretize, c, true, false);
  std::string eps_text;
  std::string weights_text;
  std::size_t max_total = cb::UniformizeOptions{}.max_total;
  discretize->add_option("--eps", eps_text, "Partition diameter and weight tolerance");
  discretize->add_option("--weights", weights_text, "Comma-separated point weights");
  discretize->add_option("--max-total", max_total, "Cap on total multiplicity");

  auto* verify = app.add_subcommand("verify", "Seeded verification suite");
  AddCommon(verify, c, false, false);
  cb::SuiteConfig suite;
  verify->add_option("--seed", suite.seed, "Suite seed");
  verify->add_option("--trials", suite.trials, "Number of instances");
  verify->add_option("--max-n", suite.max_n, "Largest instance size");
  verify->add_option("--k-min", suite.k_min, "Smallest k");
  verify->add_option("--k-max", suite.k_max, "Largest k");
  verify->add_option("--exact-limit", exact_limit, "Largest n for exact search");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  cb::ExactOptions exact_options;
  exact_options.max_points = exact_limit;
  exact_options.max_nodes = exact_nodes;

  if (analyze->parsed()) {
    const cb::ScaleParams params = Params(c);
    const auto loaded = Load(c);
    cb::CertificateOptions options;
    options.run_exact = !no_exact;
    options.exact = exact_options;
    const auto cert = cb::BuildCertificate(loaded.space, params, options);
    EmitDocument(c, cb::report::CertificateToJson(cert, c.r_text), cb::report::CertificateToText(cert));
    return 0;
  }

  if (greedy->parsed()) {
    const cb::ScaleParams params = Params(c);
    const auto loaded = Load(c);
    const auto decomposition = cb::GreedyDecompose(loaded.space, params);
    json doc = cb::report::DecompositionToJson(decomposition, c.r_text);
    const auto structure = cb::GreedyStructure(decomposition, params.k);
    doc["structure"] = cb::report::StructureToJson(structure);
    EmitDocument(c, doc, cb::report::DecompositionToText(decomposition));
    return 0;
  }

  if (exact->parsed()) {
    const cb::ScaleParams params = Params(c);
    const auto loaded = Load(c);
    const auto result = cb::ExactStructure(loaded.space, params, exact_options);
    EmitDocument(c, cb::report::ExactToJson(result, loaded.space.size(), params, c.r_text),
                 cb::report::ExactToText(result));
    return 0;
  }

  if (generate->parsed()) {
    json spec = json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) throw UsageError("cannot open " + config_path);
      try {
        in >> spec;
      } catch (const json::exception& e) {
        throw UsageError(config_path + ": " + e.what());
      }
      kind = spec.value("kind", kind);
      c.k = spec.value("k", c.k);
      if (spec.contains("r")) c.r_text = spec["r"].is_string() ? spec["r"].get<std::string>() : spec["r"].dump();
      m = spec.value("m", m);
      m0 = spec.value("m0", m0);
      seed = spec.value("seed", seed);
      if (spec.contains("noise")) {
        noise_text = spec["noise"].is_string() ? spec["noise"].get<std::string>() : spec["noise"].dump();
      }
      if (spec.contains("sizes")) {
        sizes_text.clear();
        for (const auto& s : spec["sizes"]) sizes_text += (sizes_text.empty() ? "" : ",") + s.dump();
      }
    }
    if (c.r_text.empty()) c.r_text = "1";
    const cb::ScaleParams params = Params(c);
    if (kind == "tight") {
      if (m < 1 || m0 < m) throw UsageError("tight instance needs 1 <= m <= m0");
      EmitSpace(c, cb::TightInstance({params.k, m, m0, params.r}));
      return 0;
    }
    cb::PlantedSpec planted;
    planted.k = params.k;
    planted.r = params.r;
    planted.seed = seed;
    try {
      planted.noise_fraction = cb::ParseRational(noise_text);
      for (const std::string& s : SplitCsv(sizes_text)) planted.block_sizes.push_back(std::stoul(s));
    } catch (const std::exception& e) {
      throw UsageError(std::string("planted spec: ") + e.what());
    }
    if (planted.block_sizes.empty()) throw UsageError("--sizes is required for planted instances");
    EmitSpace(c, cb::PlantedInstance(planted));
    return 0;
  }

  if (discretize->parsed()) {
    if (eps_text.empty()) throw UsageError("--eps is required");
    const cb::Rational eps = ParsePositive("--eps", eps_text);
    auto loaded = Load(c);
    cb::WeightedFiniteSpace weighted{loaded.space, loaded.weights};
    if (!weights_text.empty()) {
      weighted.weights.clear();
      try {
        for (const std::string& w : SplitCsv(weights_text)) weighted.weights.push_back(cb::ParseRational(w));
      } catch (const std::exception& e) {
        throw UsageError(std::string("--weights: ") + e.what());
      }
    }
    if (weighted.weights.empty()) weighted.weights.assign(loaded.space.size(), cb::Rational(1));
    weighted.Validate();
    const auto partition = cb::EpsilonPartition(weighted, eps);
    cb::UniformizeOptions options;
    options.max_total = max_total;
    const auto uniform = cb::Uniformize(weighted, partition, eps, options);
    json q = json::array();
    for (const auto& v : uniform.q) q.push_back(cb::ToCanonicalString(v));
    EmitSpace(c, uniform.Materialize(options.max_materialized),
              {{"parts", uniform.parts}, {"multiplicities", uniform.multiplicities}, {"q", q}});
    return 0;
  }

  if (verify->parsed()) {
    suite.options.exact = exact_options;
    const auto report = cb::RunSuite(suite);
    EmitDocument(c, cb::report::ReportToJson(report), cb::report::ReportToText(report));
    return report.failures.empty() ? 0 : 2;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return Run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "clusterbound: " << e.what() << "\n";
    return 1;
  }
}
