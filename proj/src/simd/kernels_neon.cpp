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

// AArch64 only; NEON is part of the base ISA there, so no runtime check.

#include <arm_neon.h>

#include "squarepack/simd/kernels.hpp"

namespace squarepack::simd::neon {
namespace {

inline void two_sum_into(double& sum, double& comp, double term) {
  const double t = sum + term;
  const double bp = t - sum;
  comp += (sum - (t - bp)) + (term - bp);
  sum = t;
}

// fmin/fmax differ from minpd/maxpd on signed zeros, so select explicitly.
inline float64x2_t sel_min(float64x2_t a, float64x2_t b) {
  return vbslq_f64(vcltq_f64(a, b), a, b);
}
inline float64x2_t sel_max(float64x2_t a, float64x2_t b) {
  return vbslq_f64(vcgtq_f64(a, b), a, b);
}

}  // namespace

void overlap_areas(const QueryBox& q, const BoxColumns& b,
                   std::span<double> out) {
  const std::size_t n = b.size();
  const float64x2_t qx0 = vdupq_n_f64(q.x0);
  const float64x2_t qy0 = vdupq_n_f64(q.y0);
  const float64x2_t qx1 = vdupq_n_f64(q.x1);
  const float64x2_t qy1 = vdupq_n_f64(q.y1);
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::size_t j = 0;
  for (; j + 2 <= n; j += 2) {
    const float64x2_t bx0 = vld1q_f64(b.x0.data() + j);
    const float64x2_t by0 = vld1q_f64(b.y0.data() + j);
    const float64x2_t bx1 = vld1q_f64(b.x1.data() + j);
    const float64x2_t by1 = vld1q_f64(b.y1.data() + j);
    float64x2_t w = vsubq_f64(sel_min(qx1, bx1), sel_max(qx0, bx0));
    float64x2_t h = vsubq_f64(sel_min(qy1, by1), sel_max(qy0, by0));
    w = sel_max(w, zero);
    h = sel_max(h, zero);
    vst1q_f64(out.data() + j, vmulq_f64(w, h));
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
  float64x2_t sum = vdupq_n_f64(0.0);
  float64x2_t comp = vdupq_n_f64(0.0);
  const float64x2_t ones = vdupq_n_f64(1.0);
  const float64x2_t step = vdupq_n_f64(2.0);
  std::uint64_t hi = last;
  const std::uint64_t blocks = (last - first + 1) / 2;
  const double init[2] = {static_cast<double>(hi), static_cast<double>(hi - 1)};
  float64x2_t idx = vld1q_f64(init);
  for (std::uint64_t k = 0; k < blocks; ++k) {
    const float64x2_t term = vdivq_f64(ones, idx);
    const float64x2_t t = vaddq_f64(sum, term);
    const float64x2_t bp = vsubq_f64(t, sum);
    const float64x2_t err = vaddq_f64(vsubq_f64(sum, vsubq_f64(t, bp)),
                                      vsubq_f64(term, bp));
    comp = vaddq_f64(comp, err);
    sum = t;
    idx = vsubq_f64(idx, step);
  }
  hi -= blocks * 2;
  double s = 0.0;
  double c = 0.0;
  for (std::uint64_t i = hi; i >= first && i != 0; --i) {
    two_sum_into(s, c, 1.0 / static_cast<double>(i));
  }
  two_sum_into(s, c, vgetq_lane_f64(sum, 0));
  two_sum_into(s, c, vgetq_lane_f64(sum, 1));
  c += vgetq_lane_f64(comp, 0) + vgetq_lane_f64(comp, 1);
  return s + c;
}

}  // namespace squarepack::simd::neon
