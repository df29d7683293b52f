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

#ifndef CLUSTERBOUND_KERNELS_HPP_
#define CLUSTERBOUND_KERNELS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

// Data-parallel inner loops over fixed-point distance rows and adjacency
// bitmasks. Every variant must produce results identical to the scalar
// reference; tests/kernels_test.cpp enforces this.
namespace clusterbound::kernels {

// Bit j of out[j / 64] is set iff row[j] <= threshold. Bits past row.size()
// in the last word are cleared. out.size() must be >= ceil(row.size() / 64).
using ThresholdMaskFn = void (*)(std::span<const std::int64_t> row, std::int64_t threshold,
                                 std::span<std::uint64_t> out);

// Number of j with lo < row[j] <= hi.
using CountInRangeFn = std::size_t (*)(std::span<const std::int64_t> row, std::int64_t lo,
                                       std::int64_t hi);

// popcount(a[i] & b[i]) summed over i < a.size(); b.size() >= a.size().
using PopcountAndFn = std::size_t (*)(std::span<const std::uint64_t> a,
                                      std::span<const std::uint64_t> b);

struct KernelTable {
  std::string_view name;
  ThresholdMaskFn threshold_mask;
  CountInRangeFn count_in_range;
  PopcountAndFn popcount_and;
};

const KernelTable& ScalarKernels();

// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable* Avx2Kernels();

// Best table for this CPU, resolved once. Setting CLUSTERBOUND_KERNELS=scalar
// forces the reference path.
const KernelTable& Active();

inline std::size_t WordsFor(std::size_t bits) { return (bits + 63) / 64; }

}  // namespace clusterbound::kernels

#endif  // CLUSTERBOUND_KERNELS_HPP_
