// Copyright 2026 The squarepack Authors
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

// Data-parallel inner loops. Each kernel has a scalar reference version and
// vector variants (AVX2 on x86-64, NEON on AArch64); the dispatching entry
// points pick the widest variant the running CPU supports.
//
// overlap_areas: results are bit-identical across variants (same operation
// sequence per lane, no contraction).
// harmonic_range_sum: variants differ only in summation order; all use
// compensated accumulation.

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace squarepack::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view to_string(Isa isa);

// True when the variant was compiled in and the CPU can run it.
bool isa_available(Isa isa);
Isa best_isa();
std::vector<Isa> available_isas();

// Structure-of-arrays view over closed boxes. All spans have equal length.
struct BoxColumns {
  std::span<const double> x0;
  std::span<const double> y0;
  std::span<const double> x1;
  std::span<const double> y1;

  std::size_t size() const { return x0.size(); }
};

struct QueryBox {
  double x0, y0, x1, y1;
};

// out[j] = area of (query ∩ box j), zero when they only touch or are apart.
void overlap_areas(const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out);
void overlap_areas(Isa isa, const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out);

// Sum of 1/i for i in [first, last]; zero when last < first. first >= 1.
double harmonic_range_sum(std::uint64_t first, std::uint64_t last);
double harmonic_range_sum(Isa isa, std::uint64_t first, std::uint64_t last);

namespace scalar {
void overlap_areas(const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out);
double harmonic_range_sum(std::uint64_t first, std::uint64_t last);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
void overlap_areas(const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out);
double harmonic_range_sum(std::uint64_t first, std::uint64_t last);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
void overlap_areas(const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out);
double harmonic_range_sum(std::uint64_t first, std::uint64_t last);
}  // namespace neon
#endif

}  // namespace squarepack::simd
