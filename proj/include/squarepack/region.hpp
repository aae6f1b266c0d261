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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "squarepack/geometry.hpp"

namespace squarepack {

/// Finite union of pairwise interior-disjoint closed boxes.
///
/// Subtraction removes the *open* interior of the cut, so the result stays a
/// closed set. Pieces thinner than kGeomEps produced by a split are dropped;
/// this is the only place where the tolerance enters the algebra.
class RectilinearRegion {
 public:
  RectilinearRegion() = default;
  explicit RectilinearRegion(const Box& box);
  // Union of arbitrary (possibly overlapping) boxes.
  static RectilinearRegion from_boxes(std::span<const Box> boxes);

  std::span<const Box> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  double area() const;

  // Adds the box, keeping parts disjoint.
  void add(const Box& box);
  // Removes the open interior of `cut`, splitting each hit part into at most
  // four slabs (left, right, and the bottom/top remainders in between).
  void subtract_in_place(const Box& cut);
  RectilinearRegion subtract(const Box& cut) const;
  // Drops zero-area parts.
  RectilinearRegion normalized() const;

  // Minimal x, ties broken by minimal y. Each part's minimum is its
  // bottom-left corner, so this is a scan over corners.
  std::optional<Point> lexicomin() const;

  bool contains(const Point& p, double tol = kGeomEps) const;

 private:
  std::vector<Box> parts_;
};

RectilinearRegion region_subtract(const RectilinearRegion& region,
                                  const Rectangle& cut);
RectilinearRegion region_subtract(const RectilinearRegion& region,
                                  const Box& cut);
double region_area(const RectilinearRegion& region);
std::optional<Point> region_lexicomin(const RectilinearRegion& region);

// Box of obstacle `o` grown by `margin` on all four sides.
Box inflate(const Placement& o, double margin);

// Centers at which a square of the given side fits inside `rect` without
// overlapping any obstacle interior: the inner (W-s) x (H-s) rectangle minus
// every obstacle inflated by s/2 (clipped to rect).
// Zero-side obstacles are ignored. Throws kPreconditionViolated when
// side exceeds an edge of rect or is negative.
RectilinearRegion feasible_midpoint_region(const Rectangle& rect,
                                           std::span<const Placement> obstacles,
                                           double side);

// One obstacle's share of feasible_midpoint_region: removes the obstacle
// inflated by side/2 and clipped to rect.
void subtract_obstacle(RectilinearRegion& region, const Rectangle& rect,
                       const Placement& obstacle, double side);

}  // namespace squarepack
