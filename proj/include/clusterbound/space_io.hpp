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

#ifndef CLUSTERBOUND_SPACE_IO_HPP_
#define CLUSTERBOUND_SPACE_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "clusterbound/rational.hpp"
#include "clusterbound/space.hpp"

namespace clusterbound::io {

// Malformed input; what() reads "<source>:<line>: <problem>".
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Text format:
//   line 1      n
//   line 2      n whitespace-separated labels
//   lines 3..   n rows of n decimal (or p/q) distances
FiniteSemimetricSpace ParseSpaceText(std::string_view text, const std::string& source = "<input>",
                                     BuildOptions options = {});
std::string FormatSpaceText(const FiniteSemimetricSpace& space);

// Structured form {n, labels, dist}; dist entries are decimal strings.
nlohmann::json SpaceToJson(const FiniteSemimetricSpace& space);
FiniteSemimetricSpace SpaceFromJson(const nlohmann::json& doc, const std::string& source = "<input>",
                                    BuildOptions options = {});

struct LoadedSpace {
  FiniteSemimetricSpace space;
  // Per-point weights from the structured form's optional "weights" field.
  std::vector<Rational> weights;
};

// Reads either format; JSON is detected by a leading '{'.
LoadedSpace LoadSpaceFile(const std::string& path, BuildOptions options = {});
LoadedSpace ParseSpaceAny(std::string_view text, const std::string& source, BuildOptions options = {});

void WriteTextFile(const std::string& path, std::string_view contents);

}  // namespace clusterbound::io

#endif  // CLUSTERBOUND_SPACE_IO_HPP_
