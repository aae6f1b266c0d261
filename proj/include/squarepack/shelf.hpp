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

enum class CriterionKind { kMoonMoser, kMeirMoser, kCircumference, kSmallS1 };

// Parameters of one sufficient packing criterion. `bound` holds the
// perimeter-sum bound C (circumference) and `factor` the area factor F
// (circumference, small-s1); both are ignored by the other kinds.
struct PackPrecondition {
  CriterionKind kind = CriterionKind::kMeirMoser;
  double total_area = 0.0;  // V
  double max_side = 0.0;    // x
  double a1 = 0.0;
  double a2 = 0.0;
  double bound = 0.0;
  double factor = 0.0;

  // Evaluates the kind's inequality (with kGeomEps slack) plus min edge >= x.
  bool holds() const;
};

PackPrecondition moon_moser_precondition(const Instance& inst,
                                         const Rectangle& rect);
PackPrecondition meir_moser_precondition(const Instance& inst,
                                         const Rectangle& rect);

// Whether an unmet precondition aborts (kPreconditionViolated) or the shelf
// layout is attempted anyway (kPackFailure if it does not fit).
enum class PreconditionPolicy { kEnforce, kAttempt };

// First-fit decreasing shelf layout. Shelves span the shorter edge of `rect`
// and stack along the longer one; each shelf is as tall as its first square.
// Placements are index-aligned with `sides` (which must be non-increasing)
// and relative to rect's bottom-left corner. Returns nullopt if a square
// does not fit.
std::optional<std::vector<Placement>> shelf_layout(std::span<const double> sides,
                                                   const Rectangle& rect);

// Moon-Moser: min edge >= x and 2V <= a1 a2.
Packing moon_moser_pack(const Instance& inst, const Rectangle& rect,
                        PreconditionPolicy policy = PreconditionPolicy::kEnforce);

// Meir-Moser: min edge >= x and V <= x^2 + (a1 - x)(a2 - x).
Packing meir_moser_pack(const Instance& inst, const Rectangle& rect,
                        PreconditionPolicy policy = PreconditionPolicy::kEnforce);

// Largest admissible max side (F - 1) V / C for the perimeter-based check.
double circumference_threshold(double F, double V, double C);

// x <= (F - 1) V / C. When true, every rectangle with a1 a2 = F V and
// a1 + a2 <= C satisfies the Meir-Moser precondition, because
//   x^2 + (a1 - x)(a2 - x) = 2x^2 + a1 a2 - x (a1 + a2) >= F V - (F - 1) V.
// Requires F > 1, V > 0, C > 0.
bool circumference_admits(double F, double V, double C, double x);

// Packs an instance of total area 1 with s1 <= 1/10 into the square of side
// sqrt(F), F >= (2 + sqrt 3)/3, via the Meir-Moser packer.
Packing small_s1_pack(const Instance& inst, double F);

}  // namespace squarepack
