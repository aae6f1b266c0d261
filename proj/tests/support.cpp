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


#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "squarepack/constants.hpp"
#include "squarepack/shelf.hpp"

namespace squarepack::testing {

std::string fixture(const std::string& name) {
  return std::string(SQUAREPACK_FIXTURE_DIR) + "/" + name;
}

double novotny_F() { return (2.0 + std::sqrt(3.0)) / 3.0; }

Packing novotny_packing() {
  const double a = 1.0 / std::sqrt(2.0);
  const double b = 1.0 / std::sqrt(6.0);
  return {Rectangle(a + 2.0 * b, 2.0 * b),
          {{a, 0.0, 0.0}, {b, a, 0.0}, {b, a, b}, {b, a + b, 0.0}}};
}

WhitespaceJob whitespace_158_job(double tail_scale, std::size_t tail_count) {
  const double F = novotny_F();
  const double c = compute_c(F);
  const Instance base(std::vector<double>(158, std::sqrt(1.0 / 158.0)));
  WhitespaceJob job;
  job.base = meir_moser_pack(base, Rectangle(0.9, F / 0.9));
  job.tail = Instance(
      std::vector<double>(tail_count, tail_scale * c / std::sqrt(158.0)));
  job.c = c;
  job.F = F;
  return job;
}

PackParams toy_params(double s1_threshold) {
  return PackParams::toy_params(novotny_F(), 4, 158, 1167, s1_threshold);
}

Instance case_a_instance() {
  return Instance(std::vector<double>(10000, 0.01));
}

Instance case_b_instance() {
  const double F = novotny_F();
  const double V = 0.1;
  const double delta = delta_of_V(F, V);
  const auto count = static_cast<std::size_t>(std::ceil(V / (delta * delta))) + 1;
  std::vector<double> sides(4, std::sqrt(0.225));
  sides.insert(sides.end(), count, std::sqrt(V / static_cast<double>(count)));
  return Instance(std::move(sides));
}

Instance case_c_instance() {
  const double c = compute_c(novotny_F());
  const double tail_area = 0.99 * c * c;
  const std::size_t tail_count = 200;
  std::vector<double> sides(158, std::sqrt((1.0 - tail_area) / 158.0));
  sides.insert(sides.end(), tail_count,
               std::sqrt(tail_area / static_cast<double>(tail_count)));
  return Instance(std::move(sides));
}

std::vector<double> random_sides(std::mt19937_64& rng, std::size_t count) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> sides(count);
  const int shape = static_cast<int>(rng() % 4);
  for (std::size_t i = 0; i < count; ++i) {
    const double u = unit(rng);
    switch (shape) {
      case 0: sides[i] = 0.01 + 0.99 * u; break;            // uniform
      case 1: sides[i] = std::pow(0.001 + u, 3.0); break;   // heavy small end
      case 2: sides[i] = i < 3 ? 0.7 + 0.3 * u : 0.05 * u + 1e-4; break;
      default: sides[i] = 0.5; break;                        // equal
    }
  }
  return sides;
}

namespace {

std::vector<double> scaled(std::vector<double> sides, double k) {
  for (double& s : sides) s *= k;
  return sides;
}

Rectangle random_rect(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double ratio = std::exp(unit(rng) * std::log(8.0));
  return rng() % 2 ? Rectangle(1.0, ratio) : Rectangle(ratio, 1.0);
}

std::size_t random_count(std::mt19937_64& rng) {
  return rng() % 4 == 0 ? 1 + rng() % 5 : 1 + rng() % 200;
}

}  // namespace

PackTrial random_moon_moser_trial(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Rectangle rect = random_rect(rng);
  const std::vector<double> raw = random_sides(rng, random_count(rng));
  const double V0 = sum_of_squares(raw);
  const double x0 = *std::max_element(raw.begin(), raw.end());
  const double u = rng() % 5 == 0 ? 1.0 : 0.3 + 0.7 * unit(rng);
  double k = std::sqrt(u * rect.area() / (2.0 * V0));
  k = std::min(k, rect.min_edge() / x0);
  return {Instance(scaled(raw, k)), rect};
}

PackTrial random_meir_moser_trial(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const Rectangle rect = random_rect(rng);
  const std::vector<double> raw = random_sides(rng, random_count(rng));
  const double V0 = sum_of_squares(raw);
  const double x0 = *std::max_element(raw.begin(), raw.end());
  const double a1 = rect.width();
  const double a2 = rect.height();
  // Largest k with k^2 V0 <= k^2 x0^2 + (a1 - k x0)(a2 - k x0), i.e. the
  // first positive root of A k^2 + B k + C with the coefficients below.
  const double A = 2.0 * x0 * x0 - V0;
  const double B = -x0 * (a1 + a2);
  const double C = a1 * a2;
  double root = std::numeric_limits<double>::infinity();
  if (A == 0.0) {
    root = -C / B;
  } else if (A < 0.0) {
    root = (-B - std::sqrt(B * B - 4 * A * C)) / (2 * A);
  } else if (B * B - 4 * A * C >= 0.0) {
    root = (2 * C) / (-B + std::sqrt(B * B - 4 * A * C));
  }
  double k = std::min(root, rect.min_edge() / x0);
  if (rng() % 5 != 0) k *= std::sqrt(0.5 + 0.5 * unit(rng));
  return {Instance(scaled(raw, k)), rect};
}

RegionConfig random_region_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RegionConfig cfg;
  cfg.rect = Rectangle(0.5 + 1.5 * unit(rng), 0.5 + 1.5 * unit(rng),
                       unit(rng) - 0.5, unit(rng) - 0.5);
  cfg.side = (0.02 + 0.15 * unit(rng)) * cfg.rect.min_edge();
  const double inner = (cfg.rect.width() - cfg.side) * (cfg.rect.height() - cfg.side);
  double budget = 0.5 * inner;
  const int count = 1 + static_cast<int>(rng() % 12);
  for (int i = 0; i < count; ++i) {
    double s = (0.02 + 0.3 * unit(rng)) * cfg.rect.min_edge();
    if (i % 5 == 4) s = 0.0;  // zero-side obstacles are ignored
    const double cost = (s + cfg.side) * (s + cfg.side);
    if (s > 0.0 && cost > budget) continue;
    budget -= s > 0.0 ? cost : 0.0;
    const double x = cfg.rect.x() + unit(rng) * (cfg.rect.width() - s);
    const double y = cfg.rect.y() + unit(rng) * (cfg.rect.height() - s);
    cfg.obstacles.push_back({s, x, y});
  }
  return cfg;
}

bool feasible_center(const RegionConfig& cfg, double px, double py,
                     double tol) {
  const double h = cfg.side / 2.0 - tol;
  const Rectangle& r = cfg.rect;
  if (px < r.x() + h || px > r.x() + r.width() - h || py < r.y() + h ||
      py > r.y() + r.height() - h) {
    return false;
  }
  for (const Placement& o : cfg.obstacles) {
    if (o.side == 0.0) continue;
    const double reach = (o.side + cfg.side) / 2.0 - tol;
    if (std::fabs(px - (o.x + o.side / 2.0)) < reach &&
        std::fabs(py - (o.y + o.side / 2.0)) < reach) {
      return false;
    }
  }
  return true;
}

double sampled_region_area(const RegionConfig& cfg, std::mt19937_64& rng,
                           int grid) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double h = cfg.side / 2.0;
  const double x0 = cfg.rect.x() + h;
  const double y0 = cfg.rect.y() + h;
  const double w = cfg.rect.width() - cfg.side;
  const double hh = cfg.rect.height() - cfg.side;
  std::int64_t hits = 0;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double px = x0 + w * (i + unit(rng)) / grid;
      const double py = y0 + hh * (j + unit(rng)) / grid;
      hits += feasible_center(cfg, px, py) ? 1 : 0;
    }
  }
  return w * hh * static_cast<double>(hits) / (double(grid) * grid);
}

namespace oracle {

Dec F_from(const std::string& decimal) { return Dec(decimal); }

Dec novotny() { return (Dec(2) + boost::multiprecision::sqrt(Dec(3))) / 3; }

Dec c(const Dec& F) {
  return boost::multiprecision::sqrt(Dec("0.09") + (F - 1) / 5) - Dec("0.3");
}

Dec delta_of_V(const Dec& F, const Dec& V) {
  return (F - 1) / (10 * F / V + Dec("0.1"));
}

Dec inverse_delta_sq(const Dec& F) {
  const Dec cc = c(F);
  const Dec d = delta_of_V(F, cc * cc);
  return 1 / (d * d);
}

Dec integral(const Dec& F) {
  const Dec cc = c(F);
  const auto G = [&F](const Dec& V) {
    return (-100 * F * F / V + 2 * F * boost::multiprecision::log(V) +
            V / 100) /
           ((F - 1) * (F - 1));
  };
  return G(Dec(1)) - G(cc * cc);
}

std::int64_t floor_int(const Dec& v) {
  return boost::multiprecision::floor(v).convert_to<std::int64_t>();
}

Dec e_squared() { return boost::multiprecision::exp(Dec(2)); }

}  // namespace oracle

}  // namespace squarepack::testing
