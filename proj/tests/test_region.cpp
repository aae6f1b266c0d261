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


#include <doctest.h>

#include <cmath>
#include <random>

#include "squarepack/errors.hpp"
#include "squarepack/region.hpp"
#include "support.hpp"

using namespace squarepack;

namespace {

RectilinearRegion unit_square() { return RectilinearRegion(Box{0, 0, 1, 1}); }

}  // namespace

TEST_CASE("subtracting a region from itself leaves nothing") {
  const auto r = region_subtract(unit_square(), Rectangle(1.0, 1.0));
  CHECK(r.empty());
  CHECK(region_area(r) == 0.0);
}

TEST_CASE("a disjoint cut leaves the region unchanged") {
  const auto r = region_subtract(unit_square(), Rectangle(1.0, 1.0, 5.0, 5.0));
  CHECK(region_area(r) == 1.0);
  CHECK(r.parts().size() == 1);
}

TEST_CASE("cutting the left half leaves the right half") {
  const auto r = region_subtract(unit_square(), Rectangle(0.5, 1.0));
  CHECK(region_area(r) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(*region_lexicomin(r) == Point{0.5, 0.0});
}

TEST_CASE("region area examples") {
  CHECK(region_area(RectilinearRegion()) == 0.0);
  CHECK(region_area(RectilinearRegion(Box{0, 0, 2, 3})) == 6.0);
  const Box boxes[] = {{0, 0, 1, 1}, {0.5, 0, 1.5, 1}};
  CHECK(region_area(RectilinearRegion::from_boxes(boxes)) ==
        doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("lexicographic minimum examples") {
  CHECK_FALSE(region_lexicomin(RectilinearRegion()).has_value());
  CHECK(*region_lexicomin(RectilinearRegion(Box{0, 0, 1, 1})) == Point{0, 0});
  const Box boxes[] = {{1, 5, 2, 6}, {1, 2, 2, 3}};
  CHECK(*region_lexicomin(RectilinearRegion::from_boxes(boxes)) == Point{1, 2});
}

TEST_CASE("lexicomin of a degenerate region is its point") {
  const RectilinearRegion r(Box{0.25, 0.5, 0.25, 0.5});
  CHECK(*r.lexicomin() == Point{0.25, 0.5});
  CHECK(r.normalized().empty());
}

TEST_CASE("feasible region without obstacles is the inner rectangle") {
  const Rectangle rect(2.0, 1.5);
  const auto r = feasible_midpoint_region(rect, {}, 0.25);
  CHECK(region_area(r) == doctest::Approx(1.75 * 1.25).epsilon(1e-15));
  CHECK(*region_lexicomin(r) == Point{0.125, 0.125});
}

TEST_CASE("an obstacle filling the rectangle leaves an empty region") {
  const Placement full{1.0, 0.0, 0.0};
  const auto r = feasible_midpoint_region(Rectangle(1.0, 1.0), {&full, 1}, 0.1);
  CHECK(r.empty());
  CHECK_FALSE(region_lexicomin(r).has_value());
}

TEST_CASE("a side larger than the rectangle is rejected") {
  try {
    feasible_midpoint_region(Rectangle(1.0, 0.5), {}, 0.6);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kPreconditionViolated);
  }
}

TEST_CASE("2x1 rectangle with a unit obstacle matches the sampling oracle") {
  testing::RegionConfig cfg;
  cfg.rect = Rectangle(2.0, 1.0);
  cfg.obstacles = {{1.0, 0.0, 0.0}};
  cfg.side = 0.2;
  const auto r = feasible_midpoint_region(cfg.rect, cfg.obstacles, cfg.side);
  // Only the strip x in [1.1, 1.9], y in [0.1, 0.9] survives.
  CHECK(region_area(r) == doctest::Approx(0.64).epsilon(1e-12));
  std::mt19937_64 rng(1);
  const double sampled = testing::sampled_region_area(cfg, rng);
  CHECK(std::fabs(sampled - region_area(r)) <= 1e-3 * region_area(r));
}

TEST_CASE("region area agrees with the sampling oracle on random configs") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const auto cfg = testing::random_region_config(rng);
    const auto r = feasible_midpoint_region(cfg.rect, cfg.obstacles, cfg.side);
    const double sampled = testing::sampled_region_area(cfg, rng, 400);
    CHECK(std::fabs(sampled - region_area(r)) <= 1e-3 * region_area(r));
  }
}

TEST_CASE("lexicomin centres yield packings that verify") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto cfg = testing::random_region_config(rng);
    // Obstacles may overlap each other; keep only a disjoint subset.
    Packing p{cfg.rect, {}};
    for (const Placement& o : cfg.obstacles) {
      Packing q = p;
      q.placements.push_back(o);
      if (verify_packing(q).valid) p = q;
    }
    const auto r = feasible_midpoint_region(p.rect, p.placements, cfg.side);
    const auto m = region_lexicomin(r);
    if (!m) continue;
    CHECK(testing::feasible_center({p.rect, p.placements, cfg.side}, m->x, m->y,
                                   1e-12));
    p.placements.push_back({cfg.side, m->x - cfg.side / 2, m->y - cfg.side / 2});
    CHECK(verify_packing(p).valid);
  }
}

TEST_CASE("subtraction is monotone") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    RectilinearRegion r(Box{0, 0, 1, 1});
    double last = r.area();
    for (int k = 0; k < 8; ++k) {
      const double x = u(rng), y = u(rng);
      const Box cut{x, y, x + 0.3 * u(rng), y + 0.3 * u(rng)};
      const Box bigger{cut.x0 - 0.05, cut.y0 - 0.05, cut.x1 + 0.05, cut.y1 + 0.05};
      const auto small = r.subtract(cut);
      const auto large = r.subtract(bigger);
      CHECK(small.area() <= last + 1e-15);
      CHECK(large.area() <= small.area() + 1e-15);
      for (const Box& b : large.parts()) {
        CHECK(small.contains({(b.x0 + b.x1) / 2, (b.y0 + b.y1) / 2}));
      }
      // Exact accounting: area(r) - area(r minus cut) = area(r cap cut).
      double meet = 0.0;
      for (const Box& b : r.parts()) meet += overlap_area(b, cut);
      CHECK(r.area() - small.area() == doctest::Approx(meet).epsilon(1e-9));
      r = small;
      last = r.area();
    }
  }
}

TEST_CASE("region area respects the frame accounting bound") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const auto cfg = testing::random_region_config(rng);
    const double s = cfg.side;
    const Rectangle& rect = cfg.rect;
    double bound = rect.area() - ((rect.width() + rect.height()) * s - s * s);
    for (const Placement& o : cfg.obstacles) {
      if (o.side == 0.0) continue;
      bound -= o.side * o.side + 2.0 * s * o.side + s * s;
    }
    const auto r = feasible_midpoint_region(rect, cfg.obstacles, s);
    CHECK(region_area(r) >= bound - 1e-12);
  }
}

TEST_CASE("inflated frame area is 2 s s_i + s^2") {
  const Rectangle rect(4.0, 4.0);
  const Placement o{0.5, 1.5, 1.5};
  for (double s : {0.01, 0.1, 0.3}) {
    RectilinearRegion r(rect.box());
    r.subtract_in_place(inflate(o, s / 2));
    const double frame = (rect.area() - r.area()) - o.side * o.side;
    CHECK(frame == doctest::Approx(2 * s * o.side + s * s).epsilon(1e-12));
    // Boundary frame: (W + H) s - s^2 for a W x H rectangle.
    const auto inner = feasible_midpoint_region(rect, {}, s);
    CHECK(rect.area() - inner.area() ==
          doctest::Approx((rect.width() + rect.height()) * s - s * s).epsilon(1e-12));
  }
}
