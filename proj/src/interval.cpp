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

#include "squarepack/interval.hpp"

#include <cmath>
#include <memory>
#include <string>

#include "squarepack/errors.hpp"

namespace squarepack::hp {

mpfr_prec_t bits_for_digits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

double Real::to_double(mpfr_rnd_t rnd) const { return mpfr_get_d(value_, rnd); }

std::string Real::to_decimal(int digits, mpfr_rnd_t rnd) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exp = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp, 10, static_cast<std::size_t>(digits), value_,
                   rnd),
      &mpfr_free_str);
  std::string mantissa(raw.get());
  std::string sign;
  if (!mantissa.empty() && mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  // mpfr_get_str yields 0.d1d2... x 10^exp.
  std::string out = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) out += "." + mantissa.substr(1);
  out += "e" + std::to_string(static_cast<long>(exp) - 1);
  return out;
}

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval Interval::point(long value, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_si(out.lo_.get(), value, MPFR_RNDD);
  mpfr_set_si(out.hi_.get(), value, MPFR_RNDU);
  return out;
}

Interval Interval::point(double value, mpfr_prec_t prec) {
  Interval out(prec);
  mpfr_set_d(out.lo_.get(), value, MPFR_RNDD);
  mpfr_set_d(out.hi_.get(), value, MPFR_RNDU);
  return out;
}

Interval Interval::decimal(std::string_view text, mpfr_prec_t prec) {
  const std::string s(text);
  Interval out(prec);
  char* end = nullptr;
  mpfr_strtofr(out.lo_.get(), s.c_str(), &end, 10, MPFR_RNDD);
  if (s.empty() || end != s.c_str() + s.size()) {
    fail(ErrorKind::kParseError, "not a decimal number: '" + s + "'");
  }
  mpfr_strtofr(out.hi_.get(), s.c_str(), &end, 10, MPFR_RNDU);
  if (!mpfr_number_p(out.lo_.get())) {
    fail(ErrorKind::kParseError, "not a finite number: '" + s + "'");
  }
  return out;
}

Interval Interval::hull(const Real& lo, const Real& hi) {
  Interval out(std::max(lo.precision(), hi.precision()));
  mpfr_min(out.lo_.get(), lo.get(), hi.get(), MPFR_RNDD);
  mpfr_max(out.hi_.get(), lo.get(), hi.get(), MPFR_RNDU);
  return out;
}

double Interval::mid_double() const {
  Real mid(precision() + 1);
  mpfr_add(mid.get(), lo_.get(), hi_.get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_double();
}

double Interval::width_double() const {
  Real w(precision());
  mpfr_sub(w.get(), hi_.get(), lo_.get(), MPFR_RNDU);
  return w.to_double(MPFR_RNDU);
}

bool Interval::is_point() const { return mpfr_equal_p(lo_.get(), hi_.get()); }

bool Interval::contains_zero() const {
  return mpfr_sgn(lo_.get()) <= 0 && mpfr_sgn(hi_.get()) >= 0;
}

bool Interval::contains(double value) const {
  return mpfr_cmp_d(lo_.get(), value) <= 0 && mpfr_cmp_d(hi_.get(), value) >= 0;
}

bool Interval::contains_integer() const {
  Real f(precision());
  mpfr_floor(f.get(), hi_.get());
  return mpfr_cmp(f.get(), lo_.get()) >= 0;
}

std::optional<std::int64_t> Interval::certified_floor() const {
  if (!mpfr_number_p(lo_.get()) || !mpfr_number_p(hi_.get())) {
    return std::nullopt;
  }
  if (is_point() && mpfr_integer_p(lo_.get())) {
    return static_cast<std::int64_t>(mpfr_get_si(lo_.get(), MPFR_RNDD));
  }
  if (contains_integer()) return std::nullopt;
  return static_cast<std::int64_t>(mpfr_get_si(lo_.get(), MPFR_RNDD));
}

bool Interval::certainly_less(const Interval& other) const {
  return mpfr_less_p(hi_.get(), other.lo_.get());
}

bool Interval::certainly_leq(const Interval& other) const {
  return mpfr_lessequal_p(hi_.get(), other.lo_.get());
}

bool Interval::certainly_positive() const { return mpfr_sgn(lo_.get()) > 0; }

bool Interval::possibly_less(const Interval& other) const {
  return mpfr_less_p(lo_.get(), other.hi_.get());
}

namespace {

mpfr_prec_t joint_precision(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

Interval operator+(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  mpfr_add(out.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_add(out.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  mpfr_sub(out.lower().get(), a.lower().get(), b.upper().get(), MPFR_RNDD);
  mpfr_sub(out.upper().get(), a.upper().get(), b.lower().get(), MPFR_RNDU);
  return out;
}

Interval operator-(const Interval& a) {
  Interval out(a.precision());
  mpfr_neg(out.lower().get(), a.upper().get(), MPFR_RNDD);
  mpfr_neg(out.upper().get(), a.lower().get(), MPFR_RNDU);
  return out;
}

namespace {

using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

// Evaluates op on all four endpoint combinations, keeping the smallest
// down-rounded and largest up-rounded results.
Interval corner_hull(const Interval& a, const Interval& b, BinaryOp op) {
  const mpfr_prec_t prec = joint_precision(a, b);
  Interval out(prec);
  Real tmp(prec);
  mpfr_srcptr as[2] = {a.lower().get(), a.upper().get()};
  mpfr_srcptr bs[2] = {b.lower().get(), b.upper().get()};
  bool first = true;
  for (mpfr_srcptr x : as) {
    for (mpfr_srcptr y : bs) {
      op(tmp.get(), x, y, MPFR_RNDD);
      if (first || mpfr_less_p(tmp.get(), out.lower().get())) {
        mpfr_set(out.lower().get(), tmp.get(), MPFR_RNDD);
      }
      op(tmp.get(), x, y, MPFR_RNDU);
      if (first || mpfr_greater_p(tmp.get(), out.upper().get())) {
        mpfr_set(out.upper().get(), tmp.get(), MPFR_RNDU);
      }
      first = false;
    }
  }
  return out;
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  return corner_hull(a, b, &mpfr_mul);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) {
    fail(ErrorKind::kDomainError, "interval division by an enclosure of zero");
  }
  return corner_hull(a, b, &mpfr_div);
}

Interval sqr(const Interval& a) {
  if (mpfr_sgn(a.lower().get()) >= 0) {
    Interval out(a.precision());
    mpfr_sqr(out.lower().get(), a.lower().get(), MPFR_RNDD);
    mpfr_sqr(out.upper().get(), a.upper().get(), MPFR_RNDU);
    return out;
  }
  if (mpfr_sgn(a.upper().get()) <= 0) return sqr(-a);
  Interval out(a.precision());
  Real lo2(a.precision());
  mpfr_sqr(lo2.get(), a.lower().get(), MPFR_RNDU);
  mpfr_sqr(out.upper().get(), a.upper().get(), MPFR_RNDU);
  mpfr_max(out.upper().get(), out.upper().get(), lo2.get(), MPFR_RNDU);
  mpfr_set_zero(out.lower().get(), 1);
  return out;
}

Interval sqrt(const Interval& a) {
  if (mpfr_sgn(a.upper().get()) < 0) {
    fail(ErrorKind::kDomainError, "square root of a negative enclosure");
  }
  Interval out(a.precision());
  if (mpfr_sgn(a.lower().get()) <= 0) {
    mpfr_set_zero(out.lower().get(), 1);
  } else {
    mpfr_sqrt(out.lower().get(), a.lower().get(), MPFR_RNDD);
  }
  mpfr_sqrt(out.upper().get(), a.upper().get(), MPFR_RNDU);
  return out;
}

Interval log(const Interval& a) {
  if (!a.certainly_positive()) {
    fail(ErrorKind::kDomainError, "logarithm of a non-positive enclosure");
  }
  Interval out(a.precision());
  mpfr_log(out.lower().get(), a.lower().get(), MPFR_RNDD);
  mpfr_log(out.upper().get(), a.upper().get(), MPFR_RNDU);
  return out;
}

Interval max(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  mpfr_max(out.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_max(out.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return out;
}

Interval min(const Interval& a, const Interval& b) {
  Interval out(joint_precision(a, b));
  mpfr_min(out.lower().get(), a.lower().get(), b.lower().get(), MPFR_RNDD);
  mpfr_min(out.upper().get(), a.upper().get(), b.upper().get(), MPFR_RNDU);
  return out;
}

Interval exp_two(mpfr_prec_t prec) {
  Interval sum = Interval::point(1L, prec);
  Interval term = Interval::point(1L, prec);
  const Interval two = Interval::point(2L, prec);
  // Stop once the term is below 2^-(prec + 8); e^2 > 7, so that is far
  // below the last bit of the sum.
  Real cutoff(prec);
  mpfr_set_ui_2exp(cutoff.get(), 1, -(prec + 8), MPFR_RNDN);
  long k = 1;
  for (;; ++k) {
    term = term * two / Interval::point(k, prec);
    sum = sum + term;
    if (k >= 3 && mpfr_less_p(term.upper().get(), cutoff.get())) break;
  }
  // Remainder: sum_{j>k} 2^j/j! <= term_k * 2/(k - 1) <= term_k for k >= 3.
  mpfr_add(sum.upper().get(), sum.upper().get(), term.upper().get(),
           MPFR_RNDU);
  return sum;
}

}  // namespace squarepack::hp
