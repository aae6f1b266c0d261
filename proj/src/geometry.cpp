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

#include "squarepack/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <string>

#include "squarepack/errors.hpp"
#include "squarepack/simd/kernels.hpp"

namespace squarepack {

double overlap_area(const Box& a, const Box& b) {
  const double w = std::min(a.x1, b.x1) - std::max(a.x0, b.x0);
  const double h = std::min(a.y1, b.y1) - std::max(a.y0, b.y0);
  return (w > 0.0 && h > 0.0) ? w * h : 0.0;
}

Rectangle::Rectangle(double width, double height, double x, double y)
    : width_(width), height_(height), x_(x), y_(y) {
  if (!(width > 0.0) || !(height > 0.0) || !std::isfinite(width) ||
      !std::isfinite(height)) {
    fail(ErrorKind::kPreconditionViolated,
         "rectangle edges must be positive and finite");
  }
  if (!std::isfinite(x) || !std::isfinite(y)) {
    fail(ErrorKind::kPreconditionViolated, "rectangle origin must be finite");
  }
}

double sum_of_squares(std::span<const double> values) {
  double sum = 0.0;
  double comp = 0.0;
  for (double v : values) {
    const double term = v * v;
    const double t = sum + term;
    if (std::fabs(sum) >= std::fabs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
  }
  return sum + comp;
}

Instance::Instance(std::vector<double> sides,
                   std::optional<double> declared_total_area)
    : sides_(std::move(sides)), declared_(declared_total_area) {
  for (double s : sides_) {
    if (!std::isfinite(s) || s < 0.0) {
      fail(ErrorKind::kPreconditionViolated,
           "square sides must be finite and non-negative");
    }
  }
  std::sort(sides_.begin(), sides_.end(), std::greater<>());
  total_area_ = sum_of_squares(sides_);
  if (declared_) {
    if (!(*declared_ > 0.0) || !std::isfinite(*declared_)) {
      fail(ErrorKind::kPreconditionViolated,
           "declared total area must be positive");
    }
    const double tol = 1e-9 * std::max(1.0, *declared_);
    if (std::fabs(total_area_ - *declared_) > tol) {
      fail(ErrorKind::kPreconditionViolated,
           "declared total area " + std::to_string(*declared_) +
               " does not match sum of squared sides " +
               std::to_string(total_area_));
    }
  }
}

Instance Instance::prefix(std::size_t count) const {
  count = std::min(count, sides_.size());
  return Instance(std::vector<double>(sides_.begin(), sides_.begin() + count));
}

Instance Instance::suffix(std::size_t from) const {
  from = std::min(from, sides_.size());
  return Instance(std::vector<double>(sides_.begin() + from, sides_.end()));
}

double Instance::tail_area(std::size_t from) const {
  if (from >= sides_.size()) return 0.0;
  return sum_of_squares(std::span<const double>(sides_).subspan(from));
}

double Packing::placed_area() const {
  double total = 0.0;
  for (const Placement& p : placements) total += p.side * p.side;
  return total;
}

Packing transpose(const Packing& packing) {
  Packing out{Rectangle(packing.rect.height(), packing.rect.width(),
                        packing.rect.y(), packing.rect.x()),
              {}};
  out.placements.reserve(packing.placements.size());
  for (const Placement& p : packing.placements) {
    out.placements.push_back({p.side, p.y, p.x});
  }
  return out;
}

void translate(std::vector<Placement>& placements, double dx, double dy) {
  for (Placement& p : placements) {
    p.x += dx;
    p.y += dy;
  }
}

VerificationReport verify_packing(const Packing& packing, double tol) {
  if (!(tol >= 0.0)) {
    fail(ErrorKind::kPreconditionViolated, "tolerance must be non-negative");
  }
  VerificationReport report;
  const auto& ps = packing.placements;
  const Box r = packing.rect.box();

  for (std::size_t i = 0; i < ps.size(); ++i) {
    const Placement& p = ps[i];
    if (!(p.side >= 0.0) || !std::isfinite(p.x) || !std::isfinite(p.y)) {
      report.violations.push_back({Violation::Kind::kOutside, i, i,
                                   std::numeric_limits<double>::infinity()});
      continue;
    }
    const double excess = std::max({r.x0 - p.x, r.y0 - p.y,
                                    p.x + p.side - r.x1, p.y + p.side - r.y1});
    if (excess > tol) {
      report.violations.push_back({Violation::Kind::kOutside, i, i, excess});
    }
  }

  // Sweep in x: candidates for square i are the squares whose left edge lies
  // before its right edge. Overlap areas for each window come from the SIMD
  // kernel over structure-of-arrays columns.
  std::vector<std::size_t> order;
  order.reserve(ps.size());
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].side > 0.0 && std::isfinite(ps[i].x) && std::isfinite(ps[i].y)) {
      order.push_back(i);
    }
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ps[a].x < ps[b].x || (ps[a].x == ps[b].x && a < b);
  });
  const std::size_t n = order.size();
  std::vector<double> x0(n), y0(n), x1(n), y1(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Box b = ps[order[k]].box();
    x0[k] = b.x0;
    y0[k] = b.y0;
    x1[k] = b.x1;
    y1[k] = b.y1;
  }
  std::vector<double> areas(n);
  std::vector<Violation> overlaps;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t end = static_cast<std::size_t>(
        std::lower_bound(x0.begin() + static_cast<std::ptrdiff_t>(k) + 1,
                         x0.end(), x1[k]) -
        x0.begin());
    const std::size_t len = end - (k + 1);
    if (len == 0) continue;
    simd::BoxColumns cols{std::span<const double>(x0).subspan(k + 1, len),
                          std::span<const double>(y0).subspan(k + 1, len),
                          std::span<const double>(x1).subspan(k + 1, len),
                          std::span<const double>(y1).subspan(k + 1, len)};
    simd::overlap_areas({x0[k], y0[k], x1[k], y1[k]}, cols,
                        std::span<double>(areas).first(len));
    for (std::size_t m = 0; m < len; ++m) {
      if (areas[m] > tol) {
        const std::size_t a = order[k];
        const std::size_t b = order[k + 1 + m];
        overlaps.push_back({Violation::Kind::kOverlap, std::min(a, b),
                            std::max(a, b), areas[m]});
      }
    }
  }
  std::sort(overlaps.begin(), overlaps.end(),
            [](const Violation& a, const Violation& b) {
              return a.first < b.first ||
                     (a.first == b.first && a.second < b.second);
            });
  report.violations.insert(report.violations.end(), overlaps.begin(),
                           overlaps.end());
  report.valid = report.violations.empty();
  return report;
}

}  // namespace squarepack
