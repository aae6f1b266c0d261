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

#include <cassert>

#include "squarepack/errors.hpp"
#include "squarepack/simd/kernels.hpp"

namespace squarepack::simd {
namespace {

using OverlapFn = void (*)(const QueryBox&, const BoxColumns&,
                           std::span<double>);
using HarmonicFn = double (*)(std::uint64_t, std::uint64_t);

struct KernelTable {
  OverlapFn overlap;
  HarmonicFn harmonic;
};

KernelTable table_for(Isa isa) {
  switch (isa) {
#if defined(__x86_64__) || defined(_M_X64)
    case Isa::kAvx2:
      return {&avx2::overlap_areas, &avx2::harmonic_range_sum};
#endif
#if defined(__aarch64__)
    case Isa::kNeon:
      return {&neon::overlap_areas, &neon::harmonic_range_sum};
#endif
    default:
      return {&scalar::overlap_areas, &scalar::harmonic_range_sum};
  }
}

const KernelTable& active_table() {
  static const KernelTable table = table_for(best_isa());
  return table;
}

void check_available(Isa isa) {
  if (!isa_available(isa)) {
    fail(ErrorKind::kPreconditionViolated,
         "SIMD variant not available on this CPU: " +
             std::string(to_string(isa)));
  }
}

void check_columns(const BoxColumns& boxes, std::span<double> out) {
  const std::size_t n = boxes.size();
  if (boxes.y0.size() != n || boxes.x1.size() != n || boxes.y1.size() != n ||
      out.size() < n) {
    fail(ErrorKind::kPreconditionViolated, "box column length mismatch");
  }
}

}  // namespace

std::string_view to_string(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::kNeon:
#if defined(__aarch64__)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Isa best_isa() {
  if (isa_available(Isa::kAvx2)) return Isa::kAvx2;
  if (isa_available(Isa::kNeon)) return Isa::kNeon;
  return Isa::kScalar;
}

std::vector<Isa> available_isas() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::kScalar, Isa::kAvx2, Isa::kNeon}) {
    if (isa_available(isa)) out.push_back(isa);
  }
  return out;
}

void overlap_areas(const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out) {
  check_columns(boxes, out);
  active_table().overlap(query, boxes, out);
}

void overlap_areas(Isa isa, const QueryBox& query, const BoxColumns& boxes,
                   std::span<double> out) {
  check_available(isa);
  check_columns(boxes, out);
  table_for(isa).overlap(query, boxes, out);
}

double harmonic_range_sum(std::uint64_t first, std::uint64_t last) {
  return active_table().harmonic(first, last);
}

double harmonic_range_sum(Isa isa, std::uint64_t first, std::uint64_t last) {
  check_available(isa);
  return table_for(isa).harmonic(first, last);
}

}  // namespace squarepack::simd
