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


#include "squarepack/constants.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <system_error>

#include "squarepack/errors.hpp"
#include "squarepack/simd/kernels.hpp"

namespace squarepack {

using hp::Interval;

namespace {

constexpr int kCertificateDigits = 25;

Interval lit(std::string_view text, mpfr_prec_t prec) {
  return Interval::decimal(text, prec);
}

Interval num(long v, mpfr_prec_t prec) { return Interval::point(v, prec); }

bool possibly_at_most_one(const Interval& F) {
  return mpfr_cmp_ui(F.lower().get(), 1) <= 0;
}

void require_above_one(const Interval& F, const char* what) {
  if (possibly_at_most_one(F)) {
    fail(ErrorKind::kDomainError, std::string(what) + " needs F > 1");
  }
}

std::string mid_decimal(const Interval& v, int digits = 30) {
  hp::Real mid(v.precision() + 1);
  mpfr_add(mid.get(), v.lower().get(), v.upper().get(), MPFR_RNDN);
  mpfr_div_2ui(mid.get(), mid.get(), 1, MPFR_RNDN);
  return mid.to_decimal(digits);
}

FloorCertificate certify(std::string name, const Interval& v, int digits) {
  FloorCertificate cert;
  cert.name = std::move(name);
  cert.lower = v.lower().to_decimal(kCertificateDigits, MPFR_RNDD);
  cert.upper = v.upper().to_decimal(kCertificateDigits, MPFR_RNDU);
  cert.digits = digits;
  if (auto floor = v.certified_floor()) {
    cert.value = *floor;
    cert.certified = true;
  }
  return cert;
}

// Runs `attempt` at digits, 2*digits, ... up to kMaxDigits until the
// certificate it returns is certified.
template <typename Result>
Result escalate(int digits, const std::function<Result(int)>& attempt,
                const std::function<const FloorCertificate&(const Result&)>&
                    certificate) {
  if (digits < 1) {
    fail(ErrorKind::kPreconditionViolated, "digits must be positive");
  }
  std::string last;
  for (int d = digits; d <= kMaxDigits; d *= 2) {
    Result r = attempt(d);
    const FloorCertificate& cert = certificate(r);
    if (cert.certified) return r;
    last = cert.name + " in [" + cert.lower + ", " + cert.upper + "]";
  }
  fail(ErrorKind::kFloorUncertified,
       "floor not certified at " + std::to_string(kMaxDigits) +
           " digits: " + last);
}

}  // namespace

FactorSpec FactorSpec::parse(std::string_view text) {
  if (text == "novotny") return novotny();
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    fail(ErrorKind::kParseError,
         "F must be a decimal number or 'novotny', got '" + std::string(text) +
             "'");
  }
  return FactorSpec(std::string(text), false);
}

FactorSpec FactorSpec::novotny() { return FactorSpec("novotny", true); }

FactorSpec FactorSpec::decimal(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return parse(std::string_view(buf, static_cast<std::size_t>(res.ptr - buf)));
}

Interval FactorSpec::enclose(mpfr_prec_t prec) const {
  if (novotny_) {
    return (num(2, prec) + hp::sqrt(num(3, prec))) / num(3, prec);
  }
  return Interval::decimal(text_, prec);
}

double FactorSpec::value() const {
  return enclose(hp::bits_for_digits(kDefaultDigits)).mid_double();
}

namespace hpc {

Interval c(const Interval& F) {
  if (mpfr_cmp_ui(F.lower().get(), 1) < 0) {
    fail(ErrorKind::kDomainError, "c needs F >= 1");
  }
  const mpfr_prec_t prec = F.precision();
  // sqrt(a + b) - sqrt(a) written as b / (sqrt(a + b) + sqrt(a)), which is
  // exactly zero at F = 1 and free of cancellation near it.
  const Interval b = (F - num(1, prec)) / num(5, prec);
  return b / (hp::sqrt(lit("0.09", prec) + b) + lit("0.3", prec));
}

Interval delta_of_V(const Interval& F, const Interval& V) {
  require_above_one(F, "delta");
  if (!V.certainly_positive()) {
    fail(ErrorKind::kDomainError, "delta(V) needs V > 0");
  }
  const mpfr_prec_t prec = F.precision();
  return (F - num(1, prec)) /
         (num(10, prec) * F / V + lit("0.1", prec));
}

Interval delta_simple(const Interval& F) {
  require_above_one(F, "delta");
  return delta_of_V(F, hp::sqr(c(F)));
}

Interval inverse_delta_sq(const Interval& F) {
  require_above_one(F, "1/delta^2");
  const mpfr_prec_t prec = F.precision();
  const Interval c2 = hp::sqr(c(F));
  return hp::sqr(num(10, prec) * F / c2 + lit("0.1", prec)) /
         hp::sqr(F - num(1, prec));
}

Interval integral_closed_form(const Interval& F) {
  require_above_one(F, "integral");
  const mpfr_prec_t prec = F.precision();
  const Interval one = num(1, prec);
  const Interval c2 = hp::sqr(c(F));
  const Interval inv_c2 = one / c2;
  // Antiderivative of 100F^2/V^2 + 2F/V + 1/100 over [c^2, 1].
  const Interval body = num(100, prec) * hp::sqr(F) * (inv_c2 - one) +
                        num(2, prec) * F * hp::log(inv_c2) +
                        (one - c2) / num(100, prec);
  return body / hp::sqr(F - one);
}

Interval meir_moser_slack(const Interval& F, const Interval& V,
                          const Interval& H, const Interval& x) {
  return hp::sqr(x) + (H - x) * (F * V / H - x) - V;
}

}  // namespace hpc

namespace {

mpfr_prec_t default_prec() { return hp::bits_for_digits(kDefaultDigits); }

// Smaller root of 2x^2 - x(H + FV/H) + (F - 1)V, in the cancellation-free
// form ((F-1)V/2) / (t + sqrt(t^2 - (F-1)V/2)) with t = (H + FV/H)/4.
// Empty when the discriminant is certainly negative.
std::optional<Interval> f_interval(const Interval& F, const Interval& V,
                                   const Interval& H) {
  const mpfr_prec_t prec = F.precision();
  const Interval q = (F - num(1, prec)) * V / num(2, prec);
  const Interval t = (H + F * V / H) / num(4, prec);
  const Interval disc = hp::sqr(t) - q;
  if (mpfr_sgn(disc.upper().get()) < 0) return std::nullopt;
  return q / (t + hp::sqrt(disc));
}

}  // namespace

double compute_c(double F) {
  if (!(F >= 1.0)) fail(ErrorKind::kDomainError, "c needs F >= 1");
  return hpc::c(Interval::point(F, default_prec())).mid_double();
}

double delta_simple(double F) {
  if (!(F > 1.0)) fail(ErrorKind::kDomainError, "delta needs F > 1");
  return hpc::delta_simple(Interval::point(F, default_prec())).mid_double();
}

double delta_of_V(double F, double V) {
  if (!(F > 1.0)) fail(ErrorKind::kDomainError, "delta(V) needs F > 1");
  const double c = compute_c(F);
  if (!(V >= c * c * (1.0 - 1e-12)) || !(V <= 1.0 + 1e-12)) {
    fail(ErrorKind::kDomainError,
         "delta(V) needs c^2 <= V <= 1, got V=" + std::to_string(V));
  }
  const mpfr_prec_t prec = default_prec();
  return hpc::delta_of_V(Interval::point(F, prec), Interval::point(V, prec))
      .mid_double();
}

double kval(double F, double V, double H) {
  const double q = (F - 1.0) * V / 2.0;
  const double t = (H + F * V / H) / 4.0;
  const double disc = t * t - q;
  if (disc < 0.0) return std::nan("");
  return q / (t + std::sqrt(disc));
}

N0Result n0_simple(const FactorSpec& F, int digits) {
  return escalate<N0Result>(
      digits,
      [&](int d) {
        const Interval inv = hpc::inverse_delta_sq(F.enclose(hp::bits_for_digits(d)));
        N0Result r;
        r.certificate = certify("N0_simple", inv, d);
        r.value = std::max<std::int64_t>(1, r.certificate.value);
        return r;
      },
      [](const N0Result& r) -> const FloorCertificate& { return r.certificate; });
}

N0Result n0_simple(double F) { return n0_simple(FactorSpec::decimal(F)); }

IntegralN0Result n0_integral(const FactorSpec& F, int digits) {
  const double Fd = F.value();
  if (!(Fd > 1.0)) fail(ErrorKind::kDomainError, "integral needs F > 1");
  const double c = compute_c(Fd);
  const double lo = c * c;
  const auto integrand = [Fd](double V) {
    const double r = (10.0 * Fd / V + 0.1) / (Fd - 1.0);
    return r * r;
  };
  double error = 0.0;
  const double quad =
      boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
          integrand, lo, 1.0, 20, 1e-14, &error);

  IntegralN0Result out = escalate<IntegralN0Result>(
      digits,
      [&](int d) {
        const Interval I = hpc::integral_closed_form(F.enclose(hp::bits_for_digits(d)));
        IntegralN0Result r;
        r.certificate = certify("N0_integral", I, d);
        r.value = 1 + r.certificate.value;
        r.closed_form = I.mid_double();
        return r;
      },
      [](const IntegralN0Result& r) -> const FloorCertificate& {
        return r.certificate;
      });
  out.quadrature = quad;
  out.relative_gap = std::fabs(quad - out.closed_form) / std::fabs(out.closed_form);
  if (!(out.relative_gap <= 1e-6)) {
    fail(ErrorKind::kDisagreement,
         "closed form " + std::to_string(out.closed_form) + " and quadrature " +
             std::to_string(quad) + " disagree");
  }
  return out;
}

IntegralN0Result n0_integral(double F) {
  return n0_integral(FactorSpec::decimal(F));
}

HarmonicCheck harmonic_certificate(std::uint64_t N1, std::uint64_t N) {
  HarmonicCheck h;
  h.first = N1 + 1;
  h.last = N;
  h.sum = simd::harmonic_range_sum(h.first, h.last);
  h.ln_bound = h.last >= h.first
                   ? std::log1p(static_cast<double>(h.last + 1 - h.first) /
                                static_cast<double>(h.first))
                   : 0.0;
  // Each of the (last - first + 1) additions rounds once, and each term is
  // itself rounded, so the absolute error is below 2 count eps sum.
  const double count =
      h.last >= h.first ? static_cast<double>(h.last + 1 - h.first) : 0.0;
  const double slack = 2.0 * count * std::numeric_limits<double>::epsilon() *
                       std::max(h.sum, 1.0);
  h.passed = h.sum - slack >= 1.0;
  return h;
}

NResult derive_N(const FactorSpec& F, std::int64_t N0, bool check_harmonic,
                 int digits) {
  if (N0 < 1) fail(ErrorKind::kPreconditionViolated, "N0 must be >= 1");
  struct Pair {
    NResult r;
    FloorCertificate worst;
  };
  Pair p = escalate<Pair>(
      digits,
      [&](int d) {
        const mpfr_prec_t prec = hp::bits_for_digits(d);
        const Interval Fi = F.enclose(prec);
        const Interval c = hpc::c(Fi);
        const Interval edge = hp::sqr(num(10, prec) * Fi + lit("0.1", prec));
        const Interval hundred_c2 = num(100, prec) * hp::sqr(c);
        const Interval m =
            hp::max(num(static_cast<long>(N0), prec), hp::max(edge, hundred_c2));
        Pair out;
        out.r.n1_certificate = certify("N1", m, d);
        out.worst = out.r.n1_certificate;
        if (!out.worst.certified) return out;
        out.r.N1 = out.r.n1_certificate.value;
        const Interval eN1 =
            hp::exp_two(prec) * num(static_cast<long>(out.r.N1), prec);
        out.r.n_certificate = certify("N", eN1, d);
        out.r.N = out.r.n_certificate.value;
        out.worst = out.r.n_certificate;
        return out;
      },
      [](const Pair& p) -> const FloorCertificate& { return p.worst; });
  NResult r = std::move(p.r);
  if (check_harmonic) {
    r.harmonic = harmonic_certificate(static_cast<std::uint64_t>(r.N1),
                                      static_cast<std::uint64_t>(r.N));
    if (!r.harmonic->passed) {
      fail(ErrorKind::kCertificateFailed,
           "harmonic sum over (N1, N] is " + std::to_string(r.harmonic->sum));
    }
  }
  return r;
}

NResult derive_N(double F, std::int64_t N0, bool check_harmonic) {
  return derive_N(FactorSpec::decimal(F), N0, check_harmonic);
}

HarmonicBounds harmonic_bounds(std::uint64_t n) {
  if (n < 1) fail(ErrorKind::kPreconditionViolated, "harmonic bounds need n >= 1");
  const double nd = static_cast<double>(n);
  return {std::log1p(nd), simd::harmonic_range_sum(1, n), std::log(nd) + 1.0};
}

namespace {

constexpr int kGrid = 512;
constexpr int kVerifyGrid = 100;

struct KPoint {
  Interval V;
  Interval H;
};

// (u, w) in [0,1]^2 mapped onto V in [c^2, 1] and H in [sqrt(FV), 10F].
KPoint k_point(const Interval& F, const Interval& c2, const Interval& u,
               const Interval& w) {
  const mpfr_prec_t prec = F.precision();
  const Interval one = num(1, prec);
  const Interval V = c2 + (one - c2) * u;
  const Interval lowH = hp::sqrt(F * V);
  const Interval H = lowH + (num(10, prec) * F - lowH) * w;
  return {V, H};
}

Interval fraction(long i, long n, mpfr_prec_t prec) {
  return num(i, prec) / num(n, prec);
}

}  // namespace

RefinedDelta delta_refined(const FactorSpec& F, int digits) {
  const mpfr_prec_t prec = hp::bits_for_digits(digits);
  const Interval Fi = F.enclose(prec);
  require_above_one(Fi, "refined delta");
  const Interval c2 = hp::sqr(hpc::c(Fi));

  // Grid search. Candidates are compared by their lower enclosure ends.
  std::optional<hp::Real> best;
  double bu = 0.0;
  double bw = 0.0;
  const auto consider = [&](double u, double w) {
    const KPoint k = k_point(Fi, c2, Interval::point(u, prec),
                             Interval::point(w, prec));
    const auto f = f_interval(Fi, k.V, k.H);
    if (!f) return false;
    if (!best || mpfr_less_p(f->lower().get(), best->get())) {
      best = f->lower();
      bu = u;
      bw = w;
      return true;
    }
    return false;
  };
  for (int i = 0; i < kGrid; ++i) {
    for (int j = 0; j < kGrid; ++j) {
      consider(static_cast<double>(i) / (kGrid - 1),
               static_cast<double>(j) / (kGrid - 1));
    }
  }

  RefinedDelta out;
  if (!best) {
    out.k_empty = true;
    out.delta1 = 1.0;
  } else {
    // Coordinate descent from the best cell, halving the step on stalls.
    for (double step = 1.0 / (kGrid - 1); step > 0x1p-60;) {
      const double u0 = bu;
      const double w0 = bw;
      bool moved = false;
      for (const auto& [du, dw] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
        const double u = std::clamp(u0 + du * step, 0.0, 1.0);
        const double w = std::clamp(w0 + dw * step, 0.0, 1.0);
        if ((u != u0 || w != w0) && consider(u, w)) moved = true;
      }
      if (!moved) step /= 2.0;
    }
    out.delta1 = best->to_double(MPFR_RNDD);
    const KPoint k = k_point(Fi, c2, Interval::point(bu, prec),
                             Interval::point(bw, prec));
    out.argmin_V = k.V.mid_double();
    out.argmin_H = k.H.mid_double();
  }
  const Interval c2_over_10 = c2 / num(10, prec);
  out.delta = std::min(out.delta1, c2_over_10.lower_double());

  // Certificate: Meir-Moser slack >= 0 and min edge FV/H >= delta.
  const Interval x = Interval::point(out.delta, prec);
  for (long i = 0; i < kVerifyGrid; ++i) {
    for (long j = 0; j < kVerifyGrid; ++j) {
      const KPoint k = k_point(Fi, c2, fraction(i, kVerifyGrid - 1, prec),
                               fraction(j, kVerifyGrid - 1, prec));
      const Interval slack = hpc::meir_moser_slack(Fi, k.V, k.H, x);
      const Interval short_edge = Fi * k.V / k.H;
      if (mpfr_sgn(slack.lower().get()) < 0 || short_edge.certainly_less(x)) {
        fail(ErrorKind::kCertificateFailed,
             "refined delta fails the Meir-Moser check at V=" +
                 std::to_string(k.V.mid_double()) +
                 " H=" + std::to_string(k.H.mid_double()));
      }
      ++out.verified_samples;
    }
  }
  return out;
}

RefinedDelta delta_refined(double F) {
  return delta_refined(FactorSpec::decimal(F));
}

std::optional<std::size_t> find_small_index(std::span<const double> sides,
                                            double c, std::size_t N1,
                                            std::size_t N) {
  for (std::size_t n = N1 + 1; n <= N; ++n) {
    const double s = n <= sides.size() ? sides[n - 1] : 0.0;
    if (s < c / std::sqrt(static_cast<double>(n))) return n;
  }
  return std::nullopt;
}

bool ConstantsReport::all_certified() const {
  return std::all_of(floor_certificates.begin(), floor_certificates.end(),
                     [](const FloorCertificate& f) { return f.certified; });
}

ConstantsReport compute_constants(const FactorSpec& F,
                                  const ConstantsOptions& options) {
  const mpfr_prec_t prec = hp::bits_for_digits(options.digits);
  const Interval Fi = F.enclose(prec);
  require_above_one(Fi, "constants");

  ConstantsReport r;
  r.F = F.text();
  r.F_value = mid_decimal(Fi);
  r.c = mid_decimal(hpc::c(Fi));
  r.delta_simple = mid_decimal(hpc::delta_simple(Fi));

  const auto note = [&r](const FloorCertificate& cert) {
    r.floor_certificates.push_back(cert);
    r.digits = std::max(r.digits, cert.digits);
  };

  const N0Result n0 = n0_simple(F, options.digits);
  note(n0.certificate);
  r.N0_simple = n0.value;
  const NResult n = derive_N(F, n0.value, options.check_harmonic, options.digits);
  note(n.n1_certificate);
  note(n.n_certificate);
  r.N1 = n.N1;
  r.N = n.N;
  if (n.harmonic) r.harmonic_checks.push_back(*n.harmonic);

  if (options.integral) {
    const IntegralN0Result in0 = n0_integral(F, options.digits);
    note(in0.certificate);
    r.N0_integral = in0.value;
    const NResult ni =
        derive_N(F, in0.value, options.check_harmonic, options.digits);
    FloorCertificate c1 = ni.n1_certificate;
    FloorCertificate c2 = ni.n_certificate;
    c1.name = "N1_integral";
    c2.name = "N_integral";
    note(c1);
    note(c2);
    r.N1_integral = ni.N1;
    r.N_integral = ni.N;
    if (ni.harmonic) r.harmonic_checks.push_back(*ni.harmonic);
  }

  if (options.refined) {
    const RefinedDelta d = delta_refined(F, options.digits);
    char buf[64];
    const auto put = [&buf](double v) {
      const auto res = std::to_chars(buf, buf + sizeof buf, v);
      return std::string(buf, res.ptr);
    };
    r.delta_refined = put(d.delta);
    r.delta1 = put(d.delta1);
  }
  if (r.digits == 0) r.digits = options.digits;
  return r;
}

}  // namespace squarepack
