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

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace squarepack {

// Absolute tolerance for all geometric comparisons. Inputs are O(1), so a
// single absolute value is used everywhere; boundary contact (gap >= -eps)
// counts as disjoint.
inline constexpr double kGeomEps = 1e-12;

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

// Closed axis-parallel box [x0, x1] x [y0, y1]. May be degenerate; used by
// the region algebra and the SIMD kernels.
struct Box {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;

  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const {
    return (x1 > x0 && y1 > y0) ? (x1 - x0) * (y1 - y0) : 0.0;
  }

  friend bool operator==(const Box&, const Box&) = default;
};

// Area of the intersection of two closed boxes (zero when they only touch).
double overlap_area(const Box& a, const Box& b);

// Enclosing rectangle with strictly positive edges.
class Rectangle {
 public:
  Rectangle(double width, double height, double x = 0.0, double y = 0.0);

  double width() const { return width_; }
  double height() const { return height_; }
  double x() const { return x_; }
  double y() const { return y_; }
  double area() const { return width_ * height_; }
  double min_edge() const { return width_ < height_ ? width_ : height_; }
  double max_edge() const { return width_ < height_ ? height_ : width_; }
  Box box() const { return {x_, y_, x_ + width_, y_ + height_}; }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  double width_;
  double height_;
  double x_;
  double y_;
};

// Non-increasing sequence of square side lengths.
class Instance {
 public:
  Instance() = default;
  // Sorts non-increasingly; rejects negative or non-finite sides, and a
  // declared total area that disagrees with the sides.
  explicit Instance(std::vector<double> sides,
                    std::optional<double> declared_total_area = std::nullopt);

  std::span<const double> sides() const { return sides_; }
  std::size_t size() const { return sides_.size(); }
  bool empty() const { return sides_.empty(); }
  double operator[](std::size_t i) const { return sides_[i]; }
  double max_side() const { return sides_.empty() ? 0.0 : sides_.front(); }
  double total_area() const { return total_area_; }
  std::optional<double> declared_total_area() const { return declared_; }

  // Squares [0, count) and [from, size()) respectively.
  Instance prefix(std::size_t count) const;
  Instance suffix(std::size_t from) const;
  // Sum of squared sides over indices >= from.
  double tail_area(std::size_t from) const;

 private:
  std::vector<double> sides_;
  std::optional<double> declared_;
  double total_area_ = 0.0;
};

// Neumaier-compensated sum of squares.
double sum_of_squares(std::span<const double> values);

struct Placement {
  double side = 0.0;
  double x = 0.0;  // bottom-left corner
  double y = 0.0;

  Box box() const { return {x, y, x + side, y + side}; }
  friend bool operator==(const Placement&, const Placement&) = default;
};

struct Packing {
  Rectangle rect{1.0, 1.0};
  std::vector<Placement> placements;

  double placed_area() const;
};

// Swaps the x and y axes of the rectangle and all placements.
Packing transpose(const Packing& packing);

// Shifts every placement by (dx, dy); the rectangle is left alone.
void translate(std::vector<Placement>& placements, double dx, double dy);

struct Violation {
  enum class Kind { kOutside, kOverlap };
  Kind kind = Kind::kOutside;
  std::size_t first = 0;
  // Second placement of an overlapping pair; unused for kOutside.
  std::size_t second = 0;
  // Protrusion length for kOutside, overlap area for kOverlap.
  double amount = 0.0;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

// Checks containment (protrusion <= tol) and pairwise interior-disjointness
// (overlap area <= tol). Violations are listed in index order.
VerificationReport verify_packing(const Packing& packing,
                                  double tol = kGeomEps);

}  // namespace squarepack
