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


// Constants of the finite reduction: c, the tail thresholds delta, the
// square counts N0, N1 and N. Every integer is obtained as the floor of an
// outward-rounded MPFR enclosure, and only accepted when that enclosure
// pins the floor down.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "squarepack/interval.hpp"

namespace squarepack {

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMaxDigits = 200;

// The area factor, either a decimal literal or the symbolic value
// (2 + sqrt 3)/3 ("novotny").
class FactorSpec {
 public:
  static FactorSpec parse(std::string_view text);  // kParseError on junk
  static FactorSpec novotny();
  static FactorSpec decimal(double value);  // shortest round-trip literal

  hp::Interval enclose(mpfr_prec_t prec) const;
  double value() const;
  bool is_novotny() const { return novotny_; }
  const std::string& text() const { return text_; }

 private:
  FactorSpec(std::string text, bool novotny)
      : text_(std::move(text)), novotny_(novotny) {}
  std::string text_;
  bool novotny_ = false;
};

// Interval forms. F must be an enclosure of a value > 1 unless noted.
namespace hpc {
hp::Interval c(const hp::Interval& F);  // also accepts F == 1 exactly
hp::Interval delta_simple(const hp::Interval& F);
hp::Interval delta_of_V(const hp::Interval& F, const hp::Interval& V);
// 1 / delta_simple^2 = (10F/c^2 + 1/10)^2 / (F - 1)^2.
hp::Interval inverse_delta_sq(const hp::Interval& F);
// Integral of 1/delta(V)^2 over [c^2, 1] via its antiderivative.
hp::Interval integral_closed_form(const hp::Interval& F);
// x^2 + (H - x)(FV/H - x) - V, the Meir-Moser slack of the tail rectangle.
hp::Interval meir_moser_slack(const hp::Interval& F, const hp::Interval& V,
                              const hp::Interval& H, const hp::Interval& x);
}  // namespace hpc

// Double-precision conveniences, each evaluated through the interval forms
// at kDefaultDigits and rounded to nearest. Domain errors as documented.
double compute_c(double F);                  // F >= 1
double delta_simple(double F);               // F > 1
double delta_of_V(double F, double V);       // F > 1, c^2 <= V <= 1
double kval(double F, double V, double H);   // f(V, H); nan outside K

struct FloorCertificate {
  std::string name;
  std::string lower;  // decimal enclosure of the pre-floor value
  std::string upper;
  std::int64_t value = 0;
  bool certified = false;
  int digits = 0;
};

struct N0Result {
  std::int64_t value = 0;
  FloorCertificate certificate;
};

struct IntegralN0Result {
  std::int64_t value = 0;
  double closed_form = 0.0;
  double quadrature = 0.0;
  double relative_gap = 0.0;
  FloorCertificate certificate;
};

struct HarmonicCheck {
  std::uint64_t first = 0;
  std::uint64_t last = 0;
  double sum = 0.0;      // direct compensated summation
  double ln_bound = 0.0; // ln((last + 1) / first), a lower bound on the sum
  bool passed = false;
};

struct NResult {
  std::int64_t N1 = 0;
  std::int64_t N = 0;
  FloorCertificate n1_certificate;
  FloorCertificate n_certificate;
  std::optional<HarmonicCheck> harmonic;
};

struct RefinedDelta {
  double delta = 0.0;    // min(delta1, c^2/10), rounded down
  double delta1 = 0.0;   // minimum of f over K, rounded down; 1 if K empty
  double argmin_V = 0.0;
  double argmin_H = 0.0;
  bool k_empty = false;
  std::size_t verified_samples = 0;
};

// Floors are computed at `digits` and escalated by doubling up to
// kMaxDigits; kFloorUncertified if still ambiguous.
N0Result n0_simple(const FactorSpec& F, int digits = kDefaultDigits);
N0Result n0_simple(double F);
// kDisagreement when closed form and quadrature differ by more than 1e-6
// relative.
IntegralN0Result n0_integral(const FactorSpec& F, int digits = kDefaultDigits);
IntegralN0Result n0_integral(double F);

// N1 = floor(max{N0, (10F + 1/10)^2, 100c^2}) and N = floor(e^2 N1). The
// harmonic certificate sum_{N1 < i <= N} 1/i >= 1 is summed directly when
// asked; it throws kCertificateFailed if it does not hold.
NResult derive_N(const FactorSpec& F, std::int64_t N0, bool check_harmonic = true,
                 int digits = kDefaultDigits);
NResult derive_N(double F, std::int64_t N0, bool check_harmonic = true);

HarmonicCheck harmonic_certificate(std::uint64_t N1, std::uint64_t N);

struct HarmonicBounds {
  double low = 0.0;   // ln(n + 1)
  double sum = 0.0;   // H_n
  double high = 0.0;  // ln(n) + 1
};
HarmonicBounds harmonic_bounds(std::uint64_t n);  // n >= 1

// Grid search over K plus coordinate descent, then an interval check of the
// Meir-Moser inequality at x = delta on a 100 x 100 grid over K.
// kCertificateFailed if any verification sample fails.
RefinedDelta delta_refined(const FactorSpec& F, int digits = kDefaultDigits);
RefinedDelta delta_refined(double F);

// Smallest 1-based n in (N1, N] with s_n < c / sqrt(n), sides past the end
// of the instance read as zero.
std::optional<std::size_t> find_small_index(std::span<const double> sides,
                                            double c, std::size_t N1,
                                            std::size_t N);

struct ConstantsOptions {
  bool refined = false;
  bool integral = false;
  bool check_harmonic = true;
  int digits = kDefaultDigits;
};

struct ConstantsReport {
  std::string F;  // the literal given, or "novotny"
  std::string F_value;
  std::string c;
  std::string delta_simple;
  std::optional<std::string> delta_refined;
  std::optional<std::string> delta1;
  std::int64_t N0_simple = 0;
  std::int64_t N1 = 0;
  std::int64_t N = 0;
  std::optional<std::int64_t> N0_integral;
  std::optional<std::int64_t> N1_integral;
  std::optional<std::int64_t> N_integral;
  std::vector<FloorCertificate> floor_certificates;
  std::vector<HarmonicCheck> harmonic_checks;
  int digits = 0;

  bool all_certified() const;
};

ConstantsReport compute_constants(const FactorSpec& F,
                                  const ConstantsOptions& options = {});

}  // namespace squarepack
