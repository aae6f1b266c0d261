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


// Shared fixtures and builders for the unit tests and the acceptance suite.

#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "squarepack/geometry.hpp"
#include "squarepack/reduction.hpp"
#include "squarepack/whitespace.hpp"

namespace squarepack::testing {

std::string fixture(const std::string& name);

double novotny_F();  // (2 + sqrt 3)/3 in double
Packing novotny_packing();

// 158 squares of side sqrt(1/158) shelf-packed into 0.9 x F/0.9, with a tail
// of `tail_count` squares of side tail_scale * c / sqrt(158).
WhitespaceJob whitespace_158_job(double tail_scale = 1.0,
                                 std::size_t tail_count = 158);

// Toy parameters N0 = 4, N1 = 158, N = 1167 at F = (2 + sqrt 3)/3.
PackParams toy_params(double s1_threshold = 0.1);
Instance case_a_instance();  // 10,000 squares of side 0.01
Instance case_b_instance();  // 4 squares of area 0.225 plus a tiny tail
Instance case_c_instance();  // 158 squares plus a tail of area 0.99 c^2

// Random sides in (0, 1] from one of several shapes chosen by the rng.
std::vector<double> random_sides(std::mt19937_64& rng, std::size_t count);

struct PackTrial {
  Instance inst;
  Rectangle rect{1.0, 1.0};
};

// Random instance/rectangle pairs scaled to satisfy the respective
// criterion, often right at its boundary.
PackTrial random_moon_moser_trial(std::mt19937_64& rng);
PackTrial random_meir_moser_trial(std::mt19937_64& rng);

struct RegionConfig {
  Rectangle rect{1.0, 1.0};
  std::vector<Placement> obstacles;
  double side = 0.0;
};

// Random rectangle, side and obstacles with sum (s_i + s)^2 at most half
// the inner rectangle's area, so the feasible region keeps at least half.
RegionConfig random_region_config(std::mt19937_64& rng);

// Whether a side-s square centred at p lies in rect and meets no obstacle
// interior. Written from the definition, independent of the region code.
// `tol` shrinks every obstacle's reach and widens the inner box.
bool feasible_center(const RegionConfig& cfg, double px, double py,
                     double tol = 0.0);

// Area of the feasible centres from grid x grid jittered stratified samples
// over the inner rectangle.
double sampled_region_area(const RegionConfig& cfg, std::mt19937_64& rng,
                           int grid = 1000);

// Independent evaluation of the constants in 50-digit decimal arithmetic,
// from the textbook forms (no shared code with the library).
namespace oracle {
using Dec = boost::multiprecision::cpp_dec_float_50;
Dec F_from(const std::string& decimal);
Dec novotny();
Dec c(const Dec& F);
Dec delta_of_V(const Dec& F, const Dec& V);
Dec inverse_delta_sq(const Dec& F);
Dec integral(const Dec& F);  // via the antiderivative G(1) - G(c^2)
std::int64_t floor_int(const Dec& v);
Dec e_squared();
}  // namespace oracle

}  // namespace squarepack::testing
