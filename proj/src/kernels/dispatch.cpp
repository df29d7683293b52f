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

#include <cstdlib>
#include <string_view>

#include "clusterbound/kernels.hpp"
#include "kernels/variants.hpp"

namespace clusterbound::kernels {
namespace {

bool CpuHasAvx2() {
#if defined(CLUSTERBOUND_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable* ResolveActive() {
  if (const char* forced = std::getenv("CLUSTERBOUND_KERNELS"); forced && std::string_view(forced) == "scalar") {
    return &ScalarKernels();
  }
  if (const KernelTable* table = Avx2Kernels()) return table;
  return &ScalarKernels();
}

}  // namespace

const KernelTable& ScalarKernels() {
  static const KernelTable table{"scalar", &scalar::ThresholdMask, &scalar::CountInRange, &scalar::PopcountAnd};
  return table;
}

const KernelTable* Avx2Kernels() {
#if defined(CLUSTERBOUND_HAVE_AVX2)
  static const KernelTable table{"avx2", &avx2::ThresholdMask, &avx2::CountInRange, &avx2::PopcountAnd};
  static const bool supported = CpuHasAvx2();
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable& Active() {
  static const KernelTable* table = ResolveActive();
  return *table;
}

}  // namespace clusterbound::kernels
