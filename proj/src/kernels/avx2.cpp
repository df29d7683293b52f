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

// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "clusterbound/kernels.hpp"
#include "kernels/variants.hpp"

namespace clusterbound::kernels::avx2 {
namespace {

inline std::uint64_t HorizontalSum(__m256i v) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

// Per-byte popcount via nibble lookup, summed into four 64-bit lanes.
inline __m256i PopcountBytes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4, 0, 1, 1, 2, 1, 2, 2, 3,
                                          1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

}  // namespace

void ThresholdMask(std::span<const std::int64_t> row, std::int64_t threshold, std::span<std::uint64_t> out) {
  const std::size_t n = row.size();
  const __m256i thr = _mm256_set1_epi64x(threshold);
  std::size_t j = 0;
  std::size_t word = 0;
  for (; j + 64 <= n; j += 64, ++word) {
    std::uint64_t bits = 0;
    for (std::size_t g = 0; g < 16; ++g) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + j + 4 * g));
      const int above = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(v, thr)));
      bits |= static_cast<std::uint64_t>(~above & 0xf) << (4 * g);
    }
    out[word] = bits;
  }
  if (j < n) {
    std::uint64_t bits = 0;
    std::size_t b = 0;
    for (; j + 4 <= n; j += 4, b += 4) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + j));
      const int above = _mm256_movemask_pd(_mm256_castsi256_pd(_mm256_cmpgt_epi64(v, thr)));
      bits |= static_cast<std::uint64_t>(~above & 0xf) << b;
    }
    for (; j < n; ++j, ++b) {
      if (row[j] <= threshold) bits |= std::uint64_t{1} << b;
    }
    out[word] = bits;
  }
}

std::size_t CountInRange(std::span<const std::int64_t> row, std::int64_t lo, std::int64_t hi) {
  const std::size_t n = row.size();
  const __m256i vlo = _mm256_set1_epi64x(lo);
  const __m256i vhi = _mm256_set1_epi64x(hi);
  __m256i acc = _mm256_setzero_si256();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row.data() + j));
    const __m256i inside = _mm256_andnot_si256(_mm256_cmpgt_epi64(v, vhi), _mm256_cmpgt_epi64(v, vlo));
    acc = _mm256_sub_epi64(acc, inside);
  }
  std::size_t count = static_cast<std::size_t>(HorizontalSum(acc));
  for (; j < n; ++j) count += (row[j] > lo && row[j] <= hi) ? 1 : 0;
  return count;
}

std::size_t PopcountAnd(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t n = a.size();
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
    acc = _mm256_add_epi64(acc, PopcountBytes(_mm256_and_si256(va, vb)));
  }
  std::size_t count = static_cast<std::size_t>(HorizontalSum(acc));
  for (; i < n; ++i) count += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return count;
}

}  // namespace clusterbound::kernels::avx2
