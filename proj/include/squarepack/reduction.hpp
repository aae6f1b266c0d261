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

#include <cstdint>
#include <functional>
#include <optional>

#include "squarepack/constants.hpp"
#include "squarepack/geometry.hpp"

namespace squarepack {

struct PackParams {
  double F = 0.0;
  double c = 0.0;
  std::int64_t N0 = 1;
  std::int64_t N1 = 1;
  std::int64_t N = 1;
  double s1_threshold = 0.1;
  // Small hand-picked N0/N1/N for desk-scale runs. Never certified.
  bool toy = false;

  // Certified constants for F, with N0 from the integral form.
  static PackParams certified(const FactorSpec& F);
  static PackParams toy_params(double F, std::int64_t N0, std::int64_t N1,
                               std::int64_t N, double s1_threshold = 0.1);
};

// kPreconditionViolated unless F > 1, c > 0, 1 <= N0 <= N1 <= N and
// 0 < s1_threshold <= 1/10.
void validate(const PackParams& params);

// Packs an instance into some rectangle of area F * (instance area).
using PrefixPacker = std::function<Packing(const Instance&, double F)>;

// Meir-Moser on the squarest rectangle if its criterion holds, otherwise on
// the first rectangle of a geometric sweep of smaller edges down to
// max(s1, sqrt(V)/10) that admits it, otherwise any sweep rectangle the
// shelf layout happens to fit. kPackFailure when none does.
Packing default_prefix_packer(const Instance& inst, double F);

// Squares [0, split) go into R' via the prefix packer; the rest, of total
// area V in [c^2, 1] with sides <= delta(V), go into R'' = W' x FV/W' by
// Meir-Moser, stacked on top of R' along its smaller edge W'.
Packing glue_pack(const Instance& inst, std::size_t split,
                  const PrefixPacker& prefix_packer, const PackParams& params);

enum class ReductionCase { kSmallS1, kGlue, kWhitespace };
char case_letter(ReductionCase c);  // 'a', 'b', 'c'

struct ReductionResult {
  ReductionCase which = ReductionCase::kSmallS1;
  Packing packing;
  PackParams params;
  std::optional<std::size_t> index;  // n of case (c), 1-based
};

// Case (a) s1 <= s1_threshold: small-s1 packing into a square of area F.
// Case (b) sum_{i > N1} s_i^2 >= c^2: glue at split N0.
// Case (c) otherwise: n from find_small_index; s_1..s_{n-1} plus a square of
// side sqrt(1 - sum_{i<n} s_i^2) go through the prefix packer (smaller edge
// must be >= 1/10), that square is shrunk in place to s_n, and the rest is
// placed by the whitespace packer.
ReductionResult reduce_and_pack(const Instance& inst, const PackParams& params,
                                const PrefixPacker& prefix_packer =
                                    default_prefix_packer);

}  // namespace squarepack
