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

#include "clusterbound/space_io.hpp"

#include <fstream>
#include <sstream>

namespace clusterbound::io {
namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> fields;
};

std::vector<Line> SplitLines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::istringstream in{std::string(text.substr(pos, end - pos))};
    Line line{number, {}};
    for (std::string field; in >> field;) line.fields.push_back(field);
    if (!line.fields.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

[[noreturn]] void Fail(const std::string& source, std::size_t line, const std::string& problem) {
  throw InputError(source + ":" + std::to_string(line) + ": " + problem);
}

std::size_t ParseCount(const std::string& field, const std::string& source, std::size_t line) {
  try {
    const Rational value = ParseRational(field);
    if (value < 0 || denominator(value) != 1) Fail(source, line, "point count must be a non-negative integer");
    return numerator(value).convert_to<std::size_t>();
  } catch (const ParseError& e) {
    Fail(source, line, e.what());
  }
}

}  // namespace

FiniteSemimetricSpace ParseSpaceText(std::string_view text, const std::string& source, BuildOptions options) {
  const std::vector<Line> lines = SplitLines(text);
  if (lines.empty()) Fail(source, 1, "missing point count");
  if (lines[0].fields.size() != 1) Fail(source, lines[0].number, "expected a single point count");
  const std::size_t n = ParseCount(lines[0].fields[0], source, lines[0].number);

  std::vector<std::string> labels;
  std::size_t next = 1;
  if (n > 0) {
    if (lines.size() < 2) Fail(source, lines[0].number + 1, "missing label line");
    labels = lines[1].fields;
    if (labels.size() != n) {
      Fail(source, lines[1].number,
           "expected " + std::to_string(n) + " labels, found " + std::to_string(labels.size()));
    }
    next = 2;
  }
  if (lines.size() != next + n) {
    const std::size_t at = lines.size() > next + n ? lines[next + n].number : lines.back().number + 1;
    Fail(source, at,
         "expected " + std::to_string(n) + " matrix rows, found " + std::to_string(lines.size() - next));
  }

  std::vector<Rational> dist;
  std::vector<std::string> tokens;
  dist.reserve(n * n);
  tokens.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& row = lines[next + i];
    if (row.fields.size() != n) {
      Fail(source, row.number,
           "ragged matrix: row " + std::to_string(i) + " has " + std::to_string(row.fields.size()) +
               " entries, expected " + std::to_string(n));
    }
    for (const std::string& field : row.fields) {
      try {
        dist.push_back(ParseRational(field));
      } catch (const ParseError& e) {
        Fail(source, row.number, e.what());
      }
      tokens.push_back(field);
    }
  }

  try {
    return FiniteSemimetricSpace::Build(std::move(labels), std::move(dist), std::move(tokens), options);
  } catch (const SpaceError& e) {
    const std::size_t line = e.row() == SpaceError::kNoRow ? lines[0].number : lines[next + e.row()].number;
    Fail(source, line, e.what());
  }
}

std::string FormatSpaceText(const FiniteSemimetricSpace& space) {
  std::string out = std::to_string(space.size()) + "\n";
  const std::size_t n = space.size();
  if (n == 0) return out;
  for (std::size_t i = 0; i < n; ++i) out += (i ? " " : "") + space.label(i);
  out += "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out += (j ? " " : "") + space.token(i, j);
    out += "\n";
  }
  return out;
}

nlohmann::json SpaceToJson(const FiniteSemimetricSpace& space) {
  nlohmann::json dist = nlohmann::json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.token(i, j));
    dist.push_back(std::move(row));
  }
  return nlohmann::json{{"n", space.size()}, {"labels", space.labels()}, {"dist", std::move(dist)}};
}

namespace {

LoadedSpace LoadedFromJson(const nlohmann::json& doc, const std::string& source, BuildOptions options) {
  auto fail = [&](const std::string& problem) -> void { throw InputError(source + ": " + problem); };
  if (!doc.is_object()) fail("expected an object with fields n, labels, dist");
  for (const char* field : {"n", "labels", "dist"}) {
    if (!doc.contains(field)) fail(std::string("missing field '") + field + "'");
  }
  if (!doc["n"].is_number_unsigned()) fail("field 'n' must be a non-negative integer");
  const std::size_t n = doc["n"].get<std::size_t>();
  const auto& labels_doc = doc["labels"];
  if (!labels_doc.is_array() || labels_doc.size() != n) fail("field 'labels' must hold n strings");
  std::vector<std::string> labels;
  for (const auto& l : labels_doc) {
    if (!l.is_string()) fail("labels must be strings");
    labels.push_back(l.get<std::string>());
  }

  const auto& rows = doc["dist"];
  if (!rows.is_array() || rows.size() != n) fail("field 'dist' must hold n rows");
  std::vector<Rational> dist;
  std::vector<std::string> tokens;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != n) {
      fail("ragged matrix: row " + std::to_string(i) + " has " + std::to_string(row.is_array() ? row.size() : 0) +
           " entries, expected " + std::to_string(n));
    }
    for (const auto& entry : row) {
      std::string token;
      if (entry.is_string()) {
        token = entry.get<std::string>();
      } else if (entry.is_number_integer()) {
        token = entry.dump();
      } else {
        fail("dist entries must be decimal strings (row " + std::to_string(i) + ")");
      }
      try {
        dist.push_back(ParseRational(token));
      } catch (const ParseError& e) {
        fail("row " + std::to_string(i) + ": " + e.what());
      }
      tokens.push_back(token);
    }
  }

  LoadedSpace loaded;
  try {
    loaded.space = FiniteSemimetricSpace::Build(std::move(labels), std::move(dist), std::move(tokens), options);
  } catch (const SpaceError& e) {
    fail(e.what());
  }
  if (doc.contains("weights")) {
    const auto& w = doc["weights"];
    if (!w.is_array() || w.size() != n) fail("field 'weights' must hold n entries");
    for (const auto& entry : w) {
      try {
        loaded.weights.push_back(ParseRational(entry.is_string() ? entry.get<std::string>() : entry.dump()));
      } catch (const ParseError& e) {
        fail(std::string("weights: ") + e.what());
      }
    }
  }
  return loaded;
}

}  // namespace

FiniteSemimetricSpace SpaceFromJson(const nlohmann::json& doc, const std::string& source, BuildOptions options) {
  return LoadedFromJson(doc, source, options).space;
}

LoadedSpace ParseSpaceAny(std::string_view text, const std::string& source, BuildOptions options) {
  const std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(source + ": " + e.what());
    }
    return LoadedFromJson(doc, source, options);
  }
  return LoadedSpace{ParseSpaceText(text, source, options), {}};
}

LoadedSpace LoadSpaceFile(const std::string& path, BuildOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseSpaceAny(buffer.str(), path, options);
}

void WriteTextFile(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << contents;
  if (!out) throw std::runtime_error(path + ": write failed");
}

}  // namespace clusterbound::io
