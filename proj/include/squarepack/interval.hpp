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

// Extended-precision reals and outward-rounded intervals on top of MPFR.
// Every interval operation rounds its lower end down and its upper end up,
// so the true value of any expression built from exact inputs stays inside
// the computed enclosure.

#pragma once

#include <mpfr.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace squarepack::hp {

// Bits needed for the given number of decimal digits, plus guard bits.
mpfr_prec_t bits_for_digits(int digits);

class Real {
 public:
  explicit Real(mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const;
  // Scientific notation with `digits` significant digits, rounded as asked.
  std::string to_decimal(int digits, mpfr_rnd_t rnd = MPFR_RNDN) const;

 private:
  mpfr_t value_;
};

class Interval {
 public:
  explicit Interval(mpfr_prec_t prec);

  static Interval point(long value, mpfr_prec_t prec);
  static Interval point(double value, mpfr_prec_t prec);  // exact
  // Tightest enclosure of a decimal literal such as "1.37" or "-2.5e-3".
  static Interval decimal(std::string_view text, mpfr_prec_t prec);
  static Interval hull(const Real& lo, const Real& hi);

  const Real& lower() const { return lo_; }
  const Real& upper() const { return hi_; }
  Real& lower() { return lo_; }
  Real& upper() { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  double lower_double() const { return lo_.to_double(MPFR_RNDD); }
  double upper_double() const { return hi_.to_double(MPFR_RNDU); }
  double mid_double() const;
  double width_double() const;

  bool is_point() const;
  bool contains_zero() const;
  bool contains(double value) const;
  bool contains_integer() const;
  // floor of every member; present iff the enclosure contains no integer or
  // is an exact integer point.
  std::optional<std::int64_t> certified_floor() const;

  // Certain comparisons: true only if they hold for every member.
  bool certainly_less(const Interval& other) const;
  bool certainly_leq(const Interval& other) const;
  bool certainly_positive() const;
  bool possibly_less(const Interval& other) const;

 private:
  Real lo_;
  Real hi_;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator*(const Interval& a, const Interval& b);
// Throws kDomainError when the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);

Interval sqr(const Interval& a);
// Throws kDomainError when the argument is certainly negative; clamps a
// lower end that dips below zero.
Interval sqrt(const Interval& a);
// Throws kDomainError unless the argument is certainly positive.
Interval log(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval min(const Interval& a, const Interval& b);

// Enclosure of e^2 from the exponential series with the remainder bounded
// by twice the first omitted term.
Interval exp_two(mpfr_prec_t prec);

}  // namespace squarepack::hp
