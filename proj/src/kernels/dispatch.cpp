// Copyright 2026 the lpbench authors
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
#include <string>

#include "lpbench/errors.hpp"
#include "lpbench/kernels.hpp"

namespace lpbench::kernels {
namespace {

const Table& resolve() {
  const char* env = std::getenv("LPBENCH_KERNELS");
  const std::string requested = env == nullptr ? "auto" : env;
  if (requested == "scalar") return scalar_table();
#if defined(__x86_64__) || defined(_M_X64)
  if (requested == "avx2") {
    if (!avx2_supported()) {
      throw usage_error("LPBENCH_KERNELS=avx2 but the CPU lacks AVX2/FMA");
    }
    return avx2_table();
  }
  if (requested == "auto") {
    return avx2_supported() ? avx2_table() : scalar_table();
  }
#endif
#if defined(__aarch64__)
  if (requested == "neon" || requested == "auto") return neon_table();
#endif
  if (requested == "auto") return scalar_table();
  throw usage_error("unknown LPBENCH_KERNELS value '" + requested +
                    "' (expected auto, scalar, or a supported SIMD name)");
}

}  // namespace

const Table& active() {
  static const Table& table = resolve();
  return table;
}

}  // namespace lpbench::kernels
