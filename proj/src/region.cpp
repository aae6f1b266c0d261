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

#include "squarepack/region.hpp"

#include <algorithm>
#include <cmath>

#include "squarepack/errors.hpp"

namespace squarepack {
namespace {

// True when the open interior of `cut` meets `part` by more than the
// tolerance in both axes. Degenerate parts (segments, points) count as hit
// when they lie strictly inside the cut.
bool interiors_meet(const Box& part, const Box& cut) {
  return cut.x0 < part.x1 - kGeomEps && part.x0 < cut.x1 - kGeomEps &&
         cut.y0 < part.y1 - kGeomEps && part.y0 < cut.y1 - kGeomEps;
}

template <typename Out>
void split_into(const Box& p, const Box& cut, Out&& emit) {
  const double ix0 = std::max(p.x0, cut.x0);
  const double ix1 = std::min(p.x1, cut.x1);
  const double iy0 = std::max(p.y0, cut.y0);
  const double iy1 = std::min(p.y1, cut.y1);
  if (ix0 - p.x0 > kGeomEps) emit(Box{p.x0, p.y0, ix0, p.y1});
  if (p.x1 - ix1 > kGeomEps) emit(Box{ix1, p.y0, p.x1, p.y1});
  if (iy0 - p.y0 > kGeomEps) emit(Box{ix0, p.y0, ix1, iy0});
  if (p.y1 - iy1 > kGeomEps) emit(Box{ix0, iy1, ix1, p.y1});
}

}  // namespace

RectilinearRegion::RectilinearRegion(const Box& box) {
  if (box.x1 >= box.x0 && box.y1 >= box.y0) parts_.push_back(box);
}

RectilinearRegion RectilinearRegion::from_boxes(std::span<const Box> boxes) {
  RectilinearRegion region;
  for (const Box& b : boxes) region.add(b);
  return region;
}

double RectilinearRegion::area() const {
  double total = 0.0;
  for (const Box& b : parts_) total += b.area();
  return total;
}

void RectilinearRegion::add(const Box& box) {
  if (!(box.x1 >= box.x0 && box.y1 >= box.y0)) return;
  RectilinearRegion fresh(box);
  for (const Box& existing : parts_) fresh.subtract_in_place(existing);
  parts_.insert(parts_.end(), fresh.parts_.begin(), fresh.parts_.end());
}

void RectilinearRegion::subtract_in_place(const Box& cut) {
  if (!(cut.x1 > cut.x0 && cut.y1 > cut.y0)) return;
  std::vector<Box> next;
  next.reserve(parts_.size() + 4);
  for (const Box& p : parts_) {
    if (!interiors_meet(p, cut)) {
      next.push_back(p);
      continue;
    }
    split_into(p, cut, [&](const Box& b) { next.push_back(b); });
  }
  parts_ = std::move(next);
}

RectilinearRegion RectilinearRegion::subtract(const Box& cut) const {
  RectilinearRegion out = *this;
  out.subtract_in_place(cut);
  return out;
}

RectilinearRegion RectilinearRegion::normalized() const {
  RectilinearRegion out;
  for (const Box& b : parts_) {
    if (b.area() > 0.0) out.parts_.push_back(b);
  }
  return out;
}

std::optional<Point> RectilinearRegion::lexicomin() const {
  if (parts_.empty()) return std::nullopt;
  Point best{parts_.front().x0, parts_.front().y0};
  for (const Box& b : parts_) {
    if (b.x0 < best.x || (b.x0 == best.x && b.y0 < best.y)) {
      best = {b.x0, b.y0};
    }
  }
  return best;
}

bool RectilinearRegion::contains(const Point& p, double tol) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Box& b) {
    return p.x >= b.x0 - tol && p.x <= b.x1 + tol && p.y >= b.y0 - tol &&
           p.y <= b.y1 + tol;
  });
}

RectilinearRegion region_subtract(const RectilinearRegion& region,
                                  const Rectangle& cut) {
  return region.subtract(cut.box());
}

RectilinearRegion region_subtract(const RectilinearRegion& region,
                                  const Box& cut) {
  return region.subtract(cut);
}

double region_area(const RectilinearRegion& region) { return region.area(); }

std::optional<Point> region_lexicomin(const RectilinearRegion& region) {
  return region.lexicomin();
}

Box inflate(const Placement& o, double margin) {
  return {o.x - margin, o.y - margin, o.x + o.side + margin,
          o.y + o.side + margin};
}

RectilinearRegion feasible_midpoint_region(const Rectangle& rect,
                                           std::span<const Placement> obstacles,
                                           double side) {
  if (!(side >= 0.0) || side > rect.min_edge() + kGeomEps) {
    fail(ErrorKind::kPreconditionViolated,
         "square side must lie in [0, min(W, H)]");
  }
  const double half = side / 2.0;
  const Box r = rect.box();
  Box inner{r.x0 + half, r.y0 + half, r.x1 - half, r.y1 - half};
  inner.x1 = std::max(inner.x1, inner.x0);
  inner.y1 = std::max(inner.y1, inner.y0);
  RectilinearRegion region(inner);
  for (const Placement& o : obstacles) subtract_obstacle(region, rect, o, side);
  return region;
}

void subtract_obstacle(RectilinearRegion& region, const Rectangle& rect,
                       const Placement& obstacle, double side) {
  if (!(obstacle.side > 0.0)) return;
  const Box grown = inflate(obstacle, side / 2.0);
  const Box r = rect.box();
  region.subtract_in_place({std::max(grown.x0, r.x0), std::max(grown.y0, r.y0),
                            std::min(grown.x1, r.x1),
                            std::min(grown.y1, r.y1)});
}

}  // namespace squarepack
