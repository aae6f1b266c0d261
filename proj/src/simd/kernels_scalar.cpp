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

#include "squarepack/simd/kernels.hpp"

namespace squarepack::simd::scalar {
namespace {

// Same selection semantics as minpd/maxpd so that every variant produces
// bit-identical results, signed zeros included.
inline double vmin(double a, double b) { return a < b ? a : b; }
inline double vmax(double a, double b) { return a > b ? a : b; }

}  // namespace

void overlap_areas(const QueryBox& q, const BoxColumns& b,
                   std::span<double> out) {
  const std::size_t n = b.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double w = vmax(vmin(q.x1, b.x1[j]) - vmax(q.x0, b.x0[j]), 0.0);
    const double h = vmax(vmin(q.y1, b.y1[j]) - vmax(q.y0, b.y0[j]), 0.0);
    out[j] = w * h;
  }
}

double harmonic_range_sum(std::uint64_t first, std::uint64_t last) {
  // Smallest terms first; the rounding error of every addition is recovered
  // exactly (TwoSum) and accumulated separately.
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t i = last; i >= first && i != 0; --i) {
    const double term = 1.0 / static_cast<double>(i);
    const double t = sum + term;
    const double bp = t - sum;
    comp += (sum - (t - bp)) + (term - bp);
    sum = t;
  }
  return sum + comp;
}

}  // namespace squarepack::simd::scalar
