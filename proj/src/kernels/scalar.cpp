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

#include <bit>

#include "clusterbound/kernels.hpp"
#include "kernels/variants.hpp"

namespace clusterbound::kernels::scalar {

void ThresholdMask(std::span<const std::int64_t> row, std::int64_t threshold, std::span<std::uint64_t> out) {
  const std::size_t words = WordsFor(row.size());
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] <= threshold) out[j / 64] |= std::uint64_t{1} << (j % 64);
  }
}

std::size_t CountInRange(std::span<const std::int64_t> row, std::int64_t lo, std::int64_t hi) {
  std::size_t count = 0;
  for (std::int64_t value : row) count += (value > lo && value <= hi) ? 1 : 0;
  return count;
}

std::size_t PopcountAnd(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < a.size(); ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

}  // namespace clusterbound::kernels::scalar
