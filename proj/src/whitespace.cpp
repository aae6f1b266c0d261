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

#include "squarepack/whitespace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "squarepack/errors.hpp"
#include "squarepack/region.hpp"

namespace squarepack {
namespace {

constexpr double kRelTol = 1e-12;

void require(bool ok, const std::string& what) {
  if (!ok) fail(ErrorKind::kPreconditionViolated, "whitespace job: " + what);
}

}  // namespace

void validate(const WhitespaceJob& job) {
  const double F = job.F;
  const double c = job.c;
  require(F > 1.0, "F must exceed 1");
  require(c > 0.0, "c must be positive");
  const Rectangle& rect = job.base.rect;
  const double W = rect.min_edge();
  require(W >= 0.1 - kGeomEps, "smaller edge below 1/10");
  require(std::fabs(rect.area() - F) <= kRelTol * F, "rectangle area is not F");

  const std::size_t n = job.count();
  require(n >= job.base.placements.size(), "n below number of base squares");
  require(n >= 1, "empty base");
  const double nd = static_cast<double>(n);
  const double min_n = std::max(std::pow(10.0 * F + 0.1, 2), 100.0 * c * c);
  require(nd >= min_n, "n=" + std::to_string(n) + " below max{(10F+1/10)^2, "
                           "100c^2}=" + std::to_string(min_n));

  require(job.base.placed_area() <= 1.0 + kRelTol, "base area exceeds 1");
  require(verify_packing(job.base).valid, "base packing does not verify");

  const double max_tail = c / std::sqrt(nd);
  require(job.tail.max_side() <= max_tail * (1.0 + kRelTol),
          "tail square exceeds c/sqrt(n)");
  require(job.tail.total_area() <= c * c * (1.0 + kRelTol),
          "tail area exceeds c^2");
}

double midpoint_area_bound(double F, std::size_t n, double c, double side) {
  if (n < 1 || !(side >= 0.0)) {
    fail(ErrorKind::kPreconditionViolated,
         "midpoint bound needs n >= 1 and side >= 0");
  }
  const double nd = static_cast<double>(n);
  return F - 1.0 - 4.0 * c * c - 3.0 * std::sqrt(nd) * side - nd * side * side;
}

WhitespaceResult whitespace_pack_traced(const WhitespaceJob& job) {
  validate(job);
  WhitespaceResult result{job.base, {}};
  const Rectangle& rect = job.base.rect;
  std::vector<Placement>& placed = result.packing.placements;
  placed.reserve(placed.size() + job.tail.size());

  // The region for side s depends only on s and the obstacle list, so while
  // s repeats the previous region is reused and only the newer obstacles are
  // subtracted. The subtraction order is the same as a rebuild, so the
  // placements are identical to recomputing from scratch.
  std::optional<RectilinearRegion> cached;
  double cached_side = -1.0;
  std::size_t cached_count = 0;

  for (std::size_t k = 0; k < job.tail.size(); ++k) {
    const double s = job.tail[k];
    if (s == 0.0) {
      placed.push_back({0.0, rect.x(), rect.y()});
      continue;
    }
    if (cached && s == cached_side) {
      for (std::size_t i = cached_count; i < placed.size(); ++i) {
        subtract_obstacle(*cached, rect, placed[i], s);
      }
    } else {
      cached = feasible_midpoint_region(rect, placed, s);
      cached_side = s;
    }
    cached_count = placed.size();
    const auto center = cached->lexicomin();
    if (!center) {
      fail(ErrorKind::kEmptyRegion,
           "no feasible midpoint for tail square " + std::to_string(k) +
               " of side " + std::to_string(s));
    }
    result.steps.push_back({k, s, cached->area(),
                            midpoint_area_bound(job.F, job.count(), job.c, s),
                            *center});
    placed.push_back({s, center->x - s / 2.0, center->y - s / 2.0});
  }
  return result;
}

Packing whitespace_pack(const WhitespaceJob& job) {
  return whitespace_pack_traced(job).packing;
}

}  // namespace squarepack
