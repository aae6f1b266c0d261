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

// Compiled with -mavx2; only reached through the runtime dispatcher.

#include <immintrin.h>

#include "squarepack/simd/kernels.hpp"

namespace squarepack::simd::avx2 {
namespace {

struct TwoSumAcc {
  __m256d sum = _mm256_setzero_pd();
  __m256d comp = _mm256_setzero_pd();

  void add(__m256d term) {
    const __m256d t = _mm256_add_pd(sum, term);
    const __m256d bp = _mm256_sub_pd(t, sum);
    const __m256d err = _mm256_add_pd(_mm256_sub_pd(sum, _mm256_sub_pd(t, bp)),
                                      _mm256_sub_pd(term, bp));
    comp = _mm256_add_pd(comp, err);
    sum = t;
  }
};

inline void two_sum_into(double& sum, double& comp, double term) {
  const double t = sum + term;
  const double bp = t - sum;
  comp += (sum - (t - bp)) + (term - bp);
  sum = t;
}

}  // namespace

void overlap_areas(const QueryBox& q, const BoxColumns& b,
                   std::span<double> out) {
  const std::size_t n = b.size();
  const __m256d qx0 = _mm256_set1_pd(q.x0);
  const __m256d qy0 = _mm256_set1_pd(q.y0);
  const __m256d qx1 = _mm256_set1_pd(q.x1);
  const __m256d qy1 = _mm256_set1_pd(q.y1);
  const __m256d zero = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d bx0 = _mm256_loadu_pd(b.x0.data() + j);
    const __m256d by0 = _mm256_loadu_pd(b.y0.data() + j);
    const __m256d bx1 = _mm256_loadu_pd(b.x1.data() + j);
    const __m256d by1 = _mm256_loadu_pd(b.y1.data() + j);
    __m256d w = _mm256_sub_pd(_mm256_min_pd(qx1, bx1), _mm256_max_pd(qx0, bx0));
    __m256d h = _mm256_sub_pd(_mm256_min_pd(qy1, by1), _mm256_max_pd(qy0, by0));
    w = _mm256_max_pd(w, zero);
    h = _mm256_max_pd(h, zero);
    _mm256_storeu_pd(out.data() + j, _mm256_mul_pd(w, h));
  }
  if (j < n) {
    BoxColumns rest{b.x0.subspan(j), b.y0.subspan(j), b.x1.subspan(j),
                    b.y1.subspan(j)};
    scalar::overlap_areas(q, rest, out.subspan(j));
  }
}

double harmonic_range_sum(std::uint64_t first, std::uint64_t last) {
  if (first == 0) first = 1;
  if (last < first) return 0.0;
  // Two independent accumulators walk down from `last` eight terms at a
  // time; indices stay below 2^53 so the double counters are exact.
  TwoSumAcc acc0;
  TwoSumAcc acc1;
  const __m256d ones = _mm256_set1_pd(1.0);
  const __m256d step = _mm256_set1_pd(8.0);
  std::uint64_t hi = last;
  const std::uint64_t count = last - first + 1;
  const std::uint64_t blocks = count / 8;
  __m256d idx0 = _mm256_set_pd(static_cast<double>(hi - 3),
                               static_cast<double>(hi - 2),
                               static_cast<double>(hi - 1),
                               static_cast<double>(hi));
  __m256d idx1 = _mm256_sub_pd(idx0, _mm256_set1_pd(4.0));
  for (std::uint64_t k = 0; k < blocks; ++k) {
    acc0.add(_mm256_div_pd(ones, idx0));
    acc1.add(_mm256_div_pd(ones, idx1));
    idx0 = _mm256_sub_pd(idx0, step);
    idx1 = _mm256_sub_pd(idx1, step);
  }
  hi -= blocks * 8;

  alignas(32) double s0[4], c0[4], s1[4], c1[4];
  _mm256_store_pd(s0, acc0.sum);
  _mm256_store_pd(c0, acc0.comp);
  _mm256_store_pd(s1, acc1.sum);
  _mm256_store_pd(c1, acc1.comp);
  double sum = 0.0;
  double comp = 0.0;
  for (std::uint64_t i = hi; i >= first && i != 0; --i) {
    two_sum_into(sum, comp, 1.0 / static_cast<double>(i));
  }
  for (int l = 0; l < 4; ++l) {
    two_sum_into(sum, comp, s0[l]);
    two_sum_into(sum, comp, s1[l]);
    comp += c0[l] + c1[l];
  }
  return sum + comp;
}

}  // namespace squarepack::simd::avx2
