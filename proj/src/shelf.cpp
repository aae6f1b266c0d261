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

#include "squarepack/shelf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "squarepack/errors.hpp"

namespace squarepack {
namespace {

// (2 + sqrt 3) / 3, the smallest admissible area factor.
constexpr double kNovotnyFactor = 1.2440169358562924;
constexpr double kTotalAreaTol = 1e-12;

struct Shelf {
  double y;
  double height;
  double used;
};

std::string describe(const PackPrecondition& pre) {
  std::ostringstream os;
  os.precision(17);
  os << "V=" << pre.total_area << " x=" << pre.max_side << " a1=" << pre.a1
     << " a2=" << pre.a2;
  return os.str();
}

Packing criterion_pack(const Instance& inst, const Rectangle& rect,
                       const PackPrecondition& pre, PreconditionPolicy policy,
                       const char* name) {
  if (policy == PreconditionPolicy::kEnforce && !pre.holds()) {
    fail(ErrorKind::kPreconditionViolated,
         std::string(name) + " criterion does not hold: " + describe(pre));
  }
  auto layout = shelf_layout(inst.sides(), rect);
  if (!layout) {
    fail(ErrorKind::kPackFailure,
         std::string(name) + " shelf layout did not fit: " + describe(pre));
  }
  Packing packing{rect, std::move(*layout)};
  // Output is relative to the rectangle's own origin.
  translate(packing.placements, rect.x(), rect.y());
  return packing;
}

}  // namespace

bool PackPrecondition::holds() const {
  const double lo = std::min(a1, a2);
  if (!(lo > 0.0) || max_side > lo + kGeomEps) return false;
  const double x = max_side;
  switch (kind) {
    case CriterionKind::kMoonMoser:
      return 2.0 * total_area <= a1 * a2 + kGeomEps;
    case CriterionKind::kMeirMoser:
      return total_area <= x * x + (a1 - x) * (a2 - x) + kGeomEps;
    case CriterionKind::kCircumference:
      return a1 + a2 <= bound + kGeomEps &&
             std::fabs(a1 * a2 - factor * total_area) <= kGeomEps &&
             circumference_admits(factor, total_area, bound, x);
    case CriterionKind::kSmallS1:
      return x <= 0.1 + kGeomEps &&
             std::fabs(total_area - 1.0) <= kTotalAreaTol &&
             factor >= kNovotnyFactor - kGeomEps;
  }
  return false;
}

PackPrecondition moon_moser_precondition(const Instance& inst,
                                         const Rectangle& rect) {
  return {CriterionKind::kMoonMoser, inst.total_area(), inst.max_side(),
          rect.width(), rect.height()};
}

PackPrecondition meir_moser_precondition(const Instance& inst,
                                         const Rectangle& rect) {
  return {CriterionKind::kMeirMoser, inst.total_area(), inst.max_side(),
          rect.width(), rect.height()};
}

std::optional<std::vector<Placement>> shelf_layout(std::span<const double> sides,
                                                   const Rectangle& rect) {
  const bool transposed = rect.width() > rect.height();
  const double width = rect.min_edge();
  const double height = rect.max_edge();

  std::vector<Placement> out(sides.size());
  std::vector<Shelf> shelves;
  double top = 0.0;
  for (std::size_t i = 0; i < sides.size(); ++i) {
    const double s = sides[i];
    if (s == 0.0) {
      out[i] = {0.0, 0.0, 0.0};
      continue;
    }
    if (s > width + kGeomEps) return std::nullopt;
    bool placed = false;
    for (Shelf& shelf : shelves) {
      if (shelf.used + s <= width + kGeomEps) {
        out[i] = {s, shelf.used, shelf.y};
        shelf.used += s;
        placed = true;
        break;
      }
    }
    if (placed) continue;
    if (top + s > height + kGeomEps) return std::nullopt;
    shelves.push_back({top, s, s});
    out[i] = {s, 0.0, top};
    top += s;
  }
  if (transposed) {
    for (Placement& p : out) std::swap(p.x, p.y);
  }
  return out;
}

Packing moon_moser_pack(const Instance& inst, const Rectangle& rect,
                        PreconditionPolicy policy) {
  return criterion_pack(inst, rect, moon_moser_precondition(inst, rect), policy,
                        "Moon-Moser");
}

Packing meir_moser_pack(const Instance& inst, const Rectangle& rect,
                        PreconditionPolicy policy) {
  return criterion_pack(inst, rect, meir_moser_precondition(inst, rect), policy,
                        "Meir-Moser");
}

double circumference_threshold(double F, double V, double C) {
  if (!(F > 1.0) || !(V > 0.0) || !(C > 0.0)) {
    fail(ErrorKind::kPreconditionViolated,
         "circumference check needs F > 1, V > 0, C > 0");
  }
  return (F - 1.0) * V / C;
}

bool circumference_admits(double F, double V, double C, double x) {
  const double threshold = circumference_threshold(F, V, C);
  // Relative slack of one part in 10^12 absorbs rounding when x was itself
  // computed from the same closed form.
  return x <= threshold * (1.0 + 1e-12);
}

Packing small_s1_pack(const Instance& inst, double F) {
  const double s1 = inst.max_side();
  if (s1 > 0.1 + kGeomEps) {
    fail(ErrorKind::kPreconditionViolated,
         "small-s1 packing needs s1 <= 1/10, got " + std::to_string(s1));
  }
  if (std::fabs(inst.total_area() - 1.0) > kTotalAreaTol) {
    fail(ErrorKind::kPreconditionViolated,
         "small-s1 packing needs total area 1, got " +
             std::to_string(inst.total_area()));
  }
  if (!(F >= kNovotnyFactor - kGeomEps)) {
    fail(ErrorKind::kPreconditionViolated,
         "small-s1 packing needs F >= (2 + sqrt 3)/3");
  }
  const double edge = std::sqrt(F);
  if (!(edge > 1.1) || !(s1 * s1 + (edge - s1) * (edge - s1) > 1.0)) {
    fail(ErrorKind::kCertificateFailed,
         "small-s1 margin check failed for F=" + std::to_string(F));
  }
  return meir_moser_pack(inst, Rectangle(edge, edge));
}

}  // namespace squarepack
