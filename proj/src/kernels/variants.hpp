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

#ifndef CLUSTERBOUND_SRC_KERNELS_VARIANTS_HPP_
#define CLUSTERBOUND_SRC_KERNELS_VARIANTS_HPP_

#include <cstddef>
#include <cstdint>
#include <span>

namespace clusterbound::kernels {

namespace scalar {
void ThresholdMask(std::span<const std::int64_t> row, std::int64_t threshold, std::span<std::uint64_t> out);
std::size_t CountInRange(std::span<const std::int64_t> row, std::int64_t lo, std::int64_t hi);
std::size_t PopcountAnd(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace scalar

#if defined(CLUSTERBOUND_HAVE_AVX2)
namespace avx2 {
void ThresholdMask(std::span<const std::int64_t> row, std::int64_t threshold, std::span<std::uint64_t> out);
std::size_t CountInRange(std::span<const std::int64_t> row, std::int64_t lo, std::int64_t hi);
std::size_t PopcountAnd(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);
}  // namespace avx2
#endif

}  // namespace clusterbound::kernels

#endif  // CLUSTERBOUND_SRC_KERNELS_VARIANTS_HPP_
