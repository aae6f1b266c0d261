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
#include <vector>

#include "squarepack/geometry.hpp"

namespace squarepack {

/// Packing of a tail of small squares into the whitespace left by an
/// existing packing of n squares.
///
/// Requirements checked by validate(): the base rectangle has edges
/// 1/10 <= W <= H and area F (to 1e-12); the base verifies and carries total
/// area <= 1; every tail square has side <= c / sqrt(n); the tail's total area
/// is <= c^2; and n >= max{(10F + 1/10)^2, 100 c^2}.
///
/// `n` counts the base squares including zero-side ones that were never
/// materialised; when unset it defaults to the number of base placements.
struct WhitespaceJob {
  Packing base;
  Instance tail;
  double c = 0.0;
  double F = 0.0;
  std::optional<std::size_t> n;

  std::size_t count() const { return n.value_or(base.placements.size()); }
};

// Throws kPreconditionViolated naming the first requirement that fails.
void validate(const WhitespaceJob& job);

// F - 1 - 4c^2 - 3 sqrt(n) s - n s^2: lower bound on the area of feasible
// midpoints for the next square of side s. Vanishes at s = c / sqrt(n)
// because 5c^2 + 3c = F - 1.
double midpoint_area_bound(double F, std::size_t n, double c, double side);

struct WhitespaceStep {
  std::size_t tail_index = 0;
  double side = 0.0;
  double region_area = 0.0;
  double bound = 0.0;
  Point center;
};

struct WhitespaceResult {
  Packing packing;
  std::vector<WhitespaceStep> steps;  // one per tail square with side > 0
};

// Greedy placement: each tail square goes to the lexicographically minimal
// point of its feasible midpoint region. Zero-side squares are placed at the
// rectangle's corner. Throws kEmptyRegion if a region comes out empty.
Packing whitespace_pack(const WhitespaceJob& job);
WhitespaceResult whitespace_pack_traced(const WhitespaceJob& job);

}  // namespace squarepack
