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

#include "squarepack/constants.hpp"
#include "squarepack/errors.hpp"
#include "squarepack/shelf.hpp"
#include "support.hpp"

using namespace squarepack;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::kIoError;
}

void check_sound(const Instance& inst, const Packing& p) {
  CHECK(verify_packing(p).valid);
  REQUIRE(p.placements.size() == inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    CHECK(p.placements[i].side == inst[i]);
  }
  CHECK(std::fabs(p.placed_area() - inst.total_area()) <= 1e-12);
}

}  // namespace

TEST_CASE("Moon-Moser boundary: unit square into 1 x 2") {
  const Instance inst({1.0});
  const Rectangle rect(1.0, 2.0);
  CHECK(moon_moser_precondition(inst, rect).holds());
  check_sound(inst, moon_moser_pack(inst, rect));
}

TEST_CASE("empty instance packs into any rectangle") {
  const Packing p = moon_moser_pack(Instance(), Rectangle(0.2, 3.0));
  CHECK(p.placements.empty());
  CHECK(verify_packing(p).valid);
}

TEST_CASE("Moon-Moser at 2V = 0.99 a1 a2 over random instances") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int packed = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const Rectangle rect(1.0, 1.0 + 3.0 * unit(rng));
    std::vector<double> sides = testing::random_sides(rng, 1 + rng() % 100);
    const double V0 = sum_of_squares(sides);
    const double k = std::sqrt(0.99 * rect.area() / (2.0 * V0));
    for (double& s : sides) s *= k;
    const Instance inst(std::move(sides));
    if (inst.max_side() > rect.min_edge()) continue;
    check_sound(inst, moon_moser_pack(inst, rect));
    ++packed;
  }
  CHECK(packed > 500);
}

TEST_CASE("Meir-Moser tight case: square of side x into x by x") {
  const Instance inst({0.37});
  check_sound(inst, meir_moser_pack(inst, Rectangle(0.37, 0.37)));
}

TEST_CASE("158 equal squares into 0.9 x F/0.9") {
  const double F = testing::novotny_F();
  const Instance inst(std::vector<double>(158, std::sqrt(1.0 / 158.0)));
  const Rectangle rect(0.9, F / 0.9);
  const double x = inst.max_side();
  CHECK(x == doctest::Approx(0.0796).epsilon(1e-3));
  CHECK(x * x + (0.9 - x) * (F / 0.9 - x) == doctest::Approx(1.074).epsilon(1e-3));
  check_sound(inst, meir_moser_pack(inst, rect));
}

TEST_CASE("randomized criterion-satisfying trials all pack") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto mm = testing::random_moon_moser_trial(rng);
    REQUIRE(moon_moser_precondition(mm.inst, mm.rect).holds());
    check_sound(mm.inst, moon_moser_pack(mm.inst, mm.rect));
    const auto me = testing::random_meir_moser_trial(rng);
    REQUIRE(meir_moser_precondition(me.inst, me.rect).holds());
    check_sound(me.inst, meir_moser_pack(me.inst, me.rect));
  }
}

TEST_CASE("precondition failure versus pack failure") {
  const Instance big({0.6, 0.6});
  const Rectangle unit(1.0, 1.0);
  CHECK(kind_of([&] { moon_moser_pack(big, unit); }) ==
        ErrorKind::kPreconditionViolated);
  CHECK(kind_of([&] { moon_moser_pack(big, unit, PreconditionPolicy::kAttempt); }) ==
        ErrorKind::kPackFailure);
  // The criteria are sufficient, not necessary.
  const Instance four({0.5, 0.5, 0.5, 0.5});
  CHECK_FALSE(moon_moser_precondition(four, unit).holds());
  check_sound(four, moon_moser_pack(four, unit, PreconditionPolicy::kAttempt));
}

TEST_CASE("output is relative to the rectangle origin") {
  const Instance inst({0.3, 0.2});
  const Packing p = meir_moser_pack(inst, Rectangle(1.0, 1.0, 5.0, -2.0));
  CHECK(p.placements[0].x == 5.0);
  CHECK(p.placements[0].y == -2.0);
  check_sound(inst, p);
}

TEST_CASE("circumference threshold examples") {
  for (double F : {1.1, 1.25, 1.37}) {
    CHECK(circumference_admits(F, 0.5, 4.0, 0.0));
  }
  CHECK(circumference_admits(1.25, 1.0, 3.0, 0.0833));
  CHECK_FALSE(circumference_admits(1.25, 1.0, 3.0, 0.084));
  const double F = testing::novotny_F();
  const double c = compute_c(F);
  CHECK(circumference_admits(F, c * c, 10.0 * F + c * c / 10.0, delta_simple(F)));
  CHECK_THROWS_AS(circumference_threshold(1.0, 1.0, 1.0), Error);
}

TEST_CASE("circumference admission implies Meir-Moser on any admissible ratio") {
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int tested = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const double F = 1.2 + 0.35 * unit(rng);
    // Unit target area: one square at a fraction of the threshold, the rest
    // filled with smaller equal squares. Extra area only raises the threshold.
    const double C = 2.0 * std::sqrt(F) * (1.0 + unit(rng));
    const double x = (0.3 + 0.7 * unit(rng)) * circumference_threshold(F, 1.0, C);
    const double y = x * (0.5 + 0.5 * unit(rng));
    const auto m = static_cast<std::size_t>(std::ceil((1.0 - x * x) / (y * y)));
    std::vector<double> sides(m, y);
    sides.insert(sides.begin(), x);
    const Instance inst(std::move(sides));
    const double V = inst.total_area();
    REQUIRE(circumference_admits(F, V, C, inst.max_side()));
    // a1 = sqrt(FV r), a2 = sqrt(FV / r) with a1 + a2 <= C.
    const double root = std::sqrt(F * V);
    const double t = 0.5 * C / root;  // (sqrt r + 1/sqrt r) / 2 <= t
    if (!(t > 1.0)) continue;
    const double rmax = std::pow(t + std::sqrt(t * t - 1.0), 2.0);
    const double r = std::exp(unit(rng) * std::log(rmax));
    const Rectangle rect(root * std::sqrt(r), root / std::sqrt(r));
    if (rect.width() + rect.height() > C || rect.min_edge() < inst.max_side()) continue;
    PackPrecondition pre = meir_moser_precondition(inst, rect);
    CHECK(pre.holds());
    check_sound(inst, meir_moser_pack(inst, rect));
    ++tested;
  }
  CHECK(tested >= 100);
}

TEST_CASE("small-s1 packer") {
  const double F = testing::novotny_F();
  const Instance tenths(std::vector<double>(100, 0.1));
  const Packing a = small_s1_pack(tenths, F);
  CHECK(a.rect.width() == doctest::Approx(std::sqrt(F)));
  check_sound(tenths, a);
  const Instance hundredths = testing::case_a_instance();
  check_sound(hundredths, small_s1_pack(hundredths, F));
  std::vector<double> with_big(96, 0.1);
  with_big.push_back(0.2);
  const Instance big(with_big);
  REQUIRE(big.max_side() == 0.2);
  CHECK(kind_of([&] { small_s1_pack(big, F); }) == ErrorKind::kPreconditionViolated);
  CHECK(kind_of([&] { small_s1_pack(tenths, 1.2); }) ==
        ErrorKind::kPreconditionViolated);
}
