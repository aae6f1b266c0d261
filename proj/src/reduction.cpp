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


#include "squarepack/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "squarepack/errors.hpp"
#include "squarepack/shelf.hpp"
#include "squarepack/whitespace.hpp"

namespace squarepack {
namespace {

constexpr double kAreaTol = 1e-12;
constexpr int kSweepSteps = 48;

std::string num(double v) { return std::to_string(v); }

// Rotates a packing so its rectangle's smaller edge is the width.
Packing upright(Packing p) {
  return p.rect.width() > p.rect.height() ? transpose(p) : p;
}

void require_valid(const Packing& p, const char* what) {
  if (!verify_packing(p).valid) {
    fail(ErrorKind::kPackFailure, std::string(what) + " does not verify");
  }
}

}  // namespace

PackParams PackParams::certified(const FactorSpec& F) {
  PackParams p;
  p.F = F.value();
  p.c = compute_c(p.F);
  p.N0 = n0_integral(F).value;
  const NResult n = derive_N(F, p.N0, /*check_harmonic=*/false);
  p.N1 = n.N1;
  p.N = n.N;
  return p;
}

PackParams PackParams::toy_params(double F, std::int64_t N0, std::int64_t N1,
                                  std::int64_t N, double s1_threshold) {
  PackParams p;
  p.F = F;
  p.c = compute_c(F);
  p.N0 = N0;
  p.N1 = N1;
  p.N = N;
  p.s1_threshold = s1_threshold;
  p.toy = true;
  validate(p);
  return p;
}

void validate(const PackParams& p) {
  const auto require = [](bool ok, const char* what) {
    if (!ok) fail(ErrorKind::kPreconditionViolated, std::string("params: ") + what);
  };
  require(p.F > 1.0, "F must exceed 1");
  require(p.c > 0.0, "c must be positive");
  require(p.N0 >= 1 && p.N0 <= p.N1 && p.N1 <= p.N, "need 1 <= N0 <= N1 <= N");
  require(p.s1_threshold > 0.0 && p.s1_threshold <= 0.1 + kGeomEps,
          "s1 threshold must lie in (0, 1/10]");
}

Packing default_prefix_packer(const Instance& inst, double F) {
  const double V = inst.total_area();
  if (!(V > 0.0) || !(F > 1.0)) {
    fail(ErrorKind::kPreconditionViolated,
         "prefix packer needs positive area and F > 1");
  }
  const double A = F * V;
  const double s1 = inst.max_side();
  const double top = std::sqrt(A);
  const double floor = std::max(s1, 0.1 * std::sqrt(V));
  if (floor > top) {
    fail(ErrorKind::kPackFailure, "largest square does not fit any rectangle "
                                  "of area " + num(A));
  }
  std::vector<Rectangle> sweep;
  for (int k = 0; k <= kSweepSteps; ++k) {
    const double W =
        k == kSweepSteps ? floor
                         : top * std::pow(floor / top, double(k) / kSweepSteps);
    sweep.emplace_back(W, A / W);
  }
  for (const Rectangle& r : sweep) {
    if (meir_moser_precondition(inst, r).holds()) {
      return meir_moser_pack(inst, r);
    }
  }
  for (const Rectangle& r : sweep) {
    try {
      return meir_moser_pack(inst, r, PreconditionPolicy::kAttempt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kPackFailure) throw;
    }
  }
  fail(ErrorKind::kPackFailure, "no rectangle of area " + num(A) +
                                    " admitted a shelf packing of " +
                                    std::to_string(inst.size()) + " squares");
}

Packing glue_pack(const Instance& inst, std::size_t split,
                  const PrefixPacker& prefix_packer, const PackParams& params) {
  validate(params);
  const double F = params.F;
  const double c2 = params.c * params.c;
  if (split < 1 || split > inst.size()) {
    fail(ErrorKind::kPreconditionViolated, "glue split out of range");
  }
  const Instance prefix = inst.prefix(split);
  const Instance tail = inst.suffix(split);
  const double V = tail.total_area();
  if (!(prefix.total_area() > 0.0)) {
    fail(ErrorKind::kPreconditionViolated, "glue prefix has zero area");
  }
  if (V < c2 * (1.0 - kAreaTol) || V > 1.0 + kAreaTol) {
    fail(ErrorKind::kPreconditionViolated,
         "glue tail area " + num(V) + " outside [c^2, 1]");
  }
  const double delta = delta_of_V(F, std::clamp(V, c2, 1.0));
  if (tail.max_side() > delta * (1.0 + kAreaTol)) {
    fail(ErrorKind::kPreconditionViolated,
         "glue tail square " + num(tail.max_side()) + " exceeds delta(V)=" +
             num(delta));
  }

  const Packing r1 = upright(prefix_packer(prefix, F));
  const double want = F * prefix.total_area();
  if (std::fabs(r1.rect.area() - want) > 1e-9 * want) {
    fail(ErrorKind::kPackFailure, "prefix packer returned area " +
                                      num(r1.rect.area()) + ", expected " +
                                      num(want));
  }
  require_valid(r1, "prefix packing");

  const double W = r1.rect.width();
  const double H2 = F * V / W;
  if (std::max(W, H2) > 10.0 * F * (1.0 + kAreaTol)) {
    fail(ErrorKind::kPreconditionViolated,
         "tail rectangle edge exceeds 10F");
  }
  const Packing r2 =
      meir_moser_pack(tail, Rectangle(W, H2, 0.0, r1.rect.height()));

  Packing out{Rectangle(W, r1.rect.height() + H2), {}};
  out.placements.reserve(inst.size());
  for (const Placement& p : r1.placements) {
    out.placements.push_back({p.side, p.x - r1.rect.x(), p.y - r1.rect.y()});
  }
  out.placements.insert(out.placements.end(), r2.placements.begin(),
                        r2.placements.end());
  require_valid(out, "glued packing");
  return out;
}

char case_letter(ReductionCase c) {
  switch (c) {
    case ReductionCase::kSmallS1: return 'a';
    case ReductionCase::kGlue: return 'b';
    case ReductionCase::kWhitespace: return 'c';
  }
  return '?';
}

namespace {

// Case (c). n is 1-based.
Packing whitespace_case(const Instance& inst, std::size_t n,
                        const PrefixPacker& prefix_packer,
                        const PackParams& params) {
  const double F = params.F;
  const auto post_filter = [&](Packing p) {
    p = upright(std::move(p));
    if (p.rect.width() < 0.1 - kGeomEps) {
      fail(ErrorKind::kPackFailure,
           "prefix packing has smaller edge " + num(p.rect.width()) +
               " below 1/10");
    }
    if (std::fabs(p.rect.area() - F) > 1e-9 * F) {
      fail(ErrorKind::kPackFailure, "prefix packing area is not F");
    }
    // Pin the area to F exactly as the whitespace packer demands.
    translate(p.placements, -p.rect.x(), -p.rect.y());
    p.rect = Rectangle(p.rect.width(), F / p.rect.width());
    require_valid(p, "prefix packing");
    return p;
  };

  if (n > inst.size()) {
    // Every real square is in the prefix; the stand-in square has side 0.
    return post_filter(prefix_packer(inst, F));
  }

  // s_1..s_{n-1} plus the stand-in of side sqrt(sum_{i>=n} s_i^2), slotted
  // into descending order at index `slot`.
  const double stand_in = std::sqrt(inst.tail_area(n - 1));
  std::vector<double> sides(inst.sides().begin(), inst.sides().begin() + (n - 1));
  const std::size_t slot = static_cast<std::size_t>(
      std::upper_bound(sides.begin(), sides.end(), stand_in,
                       std::greater<double>()) -
      sides.begin());
  sides.insert(sides.begin() + static_cast<std::ptrdiff_t>(slot), stand_in);
  const Instance prefix(std::move(sides));
  Packing packed = post_filter(prefix_packer(prefix, F));

  // Shrinking the stand-in in place to s_n keeps the packing valid.
  Placement shrunk = packed.placements[slot];
  shrunk.side = inst[n - 1];
  packed.placements.erase(packed.placements.begin() +
                          static_cast<std::ptrdiff_t>(slot));
  packed.placements.push_back(shrunk);

  WhitespaceJob job{std::move(packed), inst.suffix(n), params.c, F, n};
  return whitespace_pack(job);
}

}  // namespace

ReductionResult reduce_and_pack(const Instance& inst, const PackParams& params,
                                const PrefixPacker& prefix_packer) {
  validate(params);
  if (std::fabs(inst.total_area() - 1.0) > kAreaTol) {
    fail(ErrorKind::kPreconditionViolated,
         "reduction needs total area 1, got " + num(inst.total_area()));
  }
  ReductionResult r;
  r.params = params;
  const double c2 = params.c * params.c;
  const auto N0 = static_cast<std::size_t>(params.N0);
  const auto N1 = static_cast<std::size_t>(params.N1);

  if (inst.max_side() <= params.s1_threshold + kGeomEps) {
    r.which = ReductionCase::kSmallS1;
    r.packing = small_s1_pack(inst, params.F);
  } else if (inst.tail_area(std::min(N1, inst.size())) >= c2) {
    // sum_{i>N1} >= c^2 implies the same for i > N0 since N0 <= N1.
    r.which = ReductionCase::kGlue;
    r.packing = glue_pack(inst, N0, prefix_packer, params);
  } else {
    const auto n = find_small_index(inst.sides(), params.c, N1,
                                    static_cast<std::size_t>(params.N));
    if (!n) {
      fail(ErrorKind::kCertificateFailed,
           "no index in (N1, N] with s_n < c/sqrt(n); tail area below c^2 "
           "guarantees one, so the parameters are inconsistent");
    }
    r.which = ReductionCase::kWhitespace;
    r.index = n;
    r.packing = whitespace_case(inst, *n, prefix_packer, params);
  }

  if (std::fabs(r.packing.rect.area() - params.F) > kAreaTol) {
    fail(ErrorKind::kPackFailure,
         "result rectangle area " + num(r.packing.rect.area()) + " is not F");
  }
  require_valid(r.packing, "reduction result");
  return r;
}

}  // namespace squarepack
