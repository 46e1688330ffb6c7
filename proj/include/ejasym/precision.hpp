// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "ejasym/errors.hpp"

namespace ejasym {

// Decimal precision request. `working_digits` is what the caller asks for,
// `guard_digits` absorbs rounding noise so that results are trustworthy to
// the working accuracy. All mpfr work runs at bits() precision.
struct PrecisionCtx {
  long working_digits = 15;
  long guard_digits = 10;

  static PrecisionCtx make(long working) {
    long w = std::max<long>(15, working);
    return {w, std::max<long>(10, w / 10)};
  }

  long total_digits() const { return working_digits + guard_digits; }

  mpfr_prec_t bits() const {
    return static_cast<mpfr_prec_t>(
        std::ceil(static_cast<double>(total_digits()) * 3.3219280948873626) +
        16);
  }
};

// Arbitrary-precision real wrapping mpfr_t. Binary operations carry the
// larger of the two operand precisions so mixed-precision expressions never
// silently truncate.
class BigReal {
 public:
  static constexpr mpfr_prec_t kMinPrec = 64;

  BigReal() {
    mpfr_init2(v_, kMinPrec);
    mpfr_set_zero(v_, 1);
  }
  explicit BigReal(mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_zero(v_, 1);
  }
  BigReal(long x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_si(v_, x, MPFR_RNDN);
  }
  BigReal(double x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  BigReal(const mpz_class& x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  BigReal(const mpq_class& x, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  BigReal(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, clamp(prec));
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
      mpfr_clear(v_);
      throw InvalidInput("not a valid decimal number: '" + s + "'");
    }
  }

  BigReal(const BigReal& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  BigReal(BigReal&& o) noexcept {
    mpfr_init2(v_, kMinPrec);
    mpfr_swap(v_, o.v_);
  }
  BigReal& operator=(const BigReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  mpfr_srcptr mp() const { return v_; }
  mpfr_ptr mp() { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sgn() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Exact conversion: every finite binary float is rational.
  mpq_class to_rational() const {
    mpq_class q;
    mpfr_get_q(q.get_mpq_t(), v_);
    return q;
  }

  friend BigReal operator-(const BigReal& a) {
    BigReal r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigReal operator*(long a, const BigReal& b) { return b * a; }
  friend BigReal operator/(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigReal operator+(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend BigReal operator-(const BigReal& a, long b) {
    BigReal r(a.prec());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  BigReal& operator+=(const BigReal& o) { return *this = *this + o; }
  BigReal& operator-=(const BigReal& o) { return *this = *this - o; }
  BigReal& operator*=(const BigReal& o) { return *this = *this * o; }
  BigReal& operator/=(const BigReal& o) { return *this = *this / o; }
  BigReal& operator*=(long o) { return *this = *this * o; }
  BigReal& operator/=(long o) { return *this = *this / o; }

  friend bool operator<(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) > 0;
  }
  friend bool operator<=(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>=(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) >= 0;
  }
  friend bool operator==(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) == 0;
  }
  friend bool operator!=(const BigReal& a, const BigReal& b) {
    return mpfr_cmp(a.v_, b.v_) != 0;
  }
  friend bool operator<(const BigReal& a, long b) {
    return mpfr_cmp_si(a.v_, b) < 0;
  }
  friend bool operator>(const BigReal& a, long b) {
    return mpfr_cmp_si(a.v_, b) > 0;
  }
  friend bool operator<=(const BigReal& a, long b) {
    return mpfr_cmp_si(a.v_, b) <= 0;
  }
  friend bool operator>=(const BigReal& a, long b) {
    return mpfr_cmp_si(a.v_, b) >= 0;
  }
  friend bool operator==(const BigReal& a, long b) {
    return mpfr_cmp_si(a.v_, b) == 0;
  }

  // Decimal exponent estimate: floor(log10 |x|); LONG_MIN-ish for zero.
  long exp10_estimate() const {
    if (is_zero()) return -1000000000L;
    double e2 = static_cast<double>(mpfr_get_exp(v_));
    return static_cast<long>(std::floor((e2 - 1) * 0.30102999566398120));
  }

  std::string to_string(int significant) const {
    char fmt[32];
    std::snprintf(fmt, sizeof(fmt), "%%.%dRe", std::max(1, significant - 1));
    char* out = nullptr;
    mpfr_asprintf(&out, fmt, v_);
    std::string s(out);
    mpfr_free_str(out);
    return s;
  }

 private:
  static mpfr_prec_t clamp(mpfr_prec_t p) { return std::max<mpfr_prec_t>(p, kMinPrec); }
  static mpfr_prec_t join(const BigReal& a, const BigReal& b) {
    return std::max(a.prec(), b.prec());
  }
  mpfr_t v_;
};

inline BigReal abs(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_abs(r.mp(), a.mp(), MPFR_RNDN);
  return r;
}
inline BigReal sqrt(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_sqrt(r.mp(), a.mp(), MPFR_RNDN);
  return r;
}
inline BigReal exp(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_exp(r.mp(), a.mp(), MPFR_RNDN);
  return r;
}
inline BigReal log(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_log(r.mp(), a.mp(), MPFR_RNDN);
  return r;
}
inline BigReal sin(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_sin(r.mp(), a.mp(), MPFR_RNDN);
  return r;
}
inline BigReal cos(const BigReal& a) {
  BigReal r(a.prec());
  mpfr_cos(r.mp(), a.mp(), MPFR_RNDN);
  return r;
}
inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(y.prec(), x.prec()));
  mpfr_atan2(r.mp(), y.mp(), x.mp(), MPFR_RNDN);
  return r;
}
inline BigReal hypot(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(y.prec(), x.prec()));
  mpfr_hypot(r.mp(), x.mp(), y.mp(), MPFR_RNDN);
  return r;
}
inline BigReal pow(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.prec(), b.prec()));
  mpfr_pow(r.mp(), a.mp(), b.mp(), MPFR_RNDN);
  return r;
}
inline BigReal pow(const BigReal& a, long b) {
  BigReal r(a.prec());
  mpfr_pow_si(r.mp(), a.mp(), b, MPFR_RNDN);
  return r;
}
inline BigReal fmod(const BigReal& a, const BigReal& b) {
  BigReal r(std::max(a.prec(), b.prec()));
  mpfr_fmod(r.mp(), a.mp(), b.mp(), MPFR_RNDN);
  return r;
}
inline BigReal min(const BigReal& a, const BigReal& b) { return a < b ? a : b; }
inline BigReal max(const BigReal& a, const BigReal& b) { return a > b ? a : b; }

inline BigReal const_pi(mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_const_pi(r.mp(), MPFR_RNDN);
  return r;
}

// 10^e at the given precision (exact for e >= 0).
inline BigReal pow10(long e, mpfr_prec_t prec) {
  BigReal r(prec);
  mpfr_ui_pow_ui(r.mp(), 10u, static_cast<unsigned long>(e < 0 ? -e : e),
                 MPFR_RNDN);
  if (e < 0) mpfr_si_div(r.mp(), 1, r.mp(), MPFR_RNDN);
  return r;
}

// Complex value over BigReal with principal-branch log/pow. arg() lies in
// (-pi, pi].
class BigComplex {
 public:
  BigComplex() = default;
  explicit BigComplex(mpfr_prec_t prec) : re_(prec), im_(prec) {}
  BigComplex(BigReal re, BigReal im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit BigComplex(BigReal re) : re_(std::move(re)), im_(re_.prec()) {}

  const BigReal& real() const { return re_; }
  const BigReal& imag() const { return im_; }
  mpfr_prec_t prec() const { return std::max(re_.prec(), im_.prec()); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  friend BigComplex operator-(const BigComplex& z) { return {-z.re_, -z.im_}; }
  friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
    return {a.re_ + b.re_, a.im_ + b.im_};
  }
  friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
    return {a.re_ - b.re_, a.im_ - b.im_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
  }
  friend BigComplex operator*(const BigComplex& a, const BigReal& s) {
    return {a.re_ * s, a.im_ * s};
  }
  friend BigComplex operator*(const BigReal& s, const BigComplex& a) {
    return a * s;
  }
  friend BigComplex operator/(const BigComplex& a, const BigReal& s) {
    return {a.re_ / s, a.im_ / s};
  }
  friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigReal d = b.re_ * b.re_ + b.im_ * b.im_;
    return {(a.re_ * b.re_ + a.im_ * b.im_) / d,
            (a.im_ * b.re_ - a.re_ * b.im_) / d};
  }
  BigComplex& operator+=(const BigComplex& o) { return *this = *this + o; }
  BigComplex& operator-=(const BigComplex& o) { return *this = *this - o; }
  BigComplex& operator*=(const BigComplex& o) { return *this = *this * o; }

  BigComplex conj() const { return {re_, -im_}; }

 private:
  BigReal re_, im_;
};

inline BigReal abs(const BigComplex& z) { return hypot(z.real(), z.imag()); }
inline BigReal arg(const BigComplex& z) { return atan2(z.imag(), z.real()); }

inline BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.real());
  if (z.is_real()) return BigComplex(m, BigReal(z.prec()));
  return {m * cos(z.imag()), m * sin(z.imag())};
}

inline BigComplex log(const BigComplex& z) {
  return {log(abs(z)), arg(z)};
}

// Principal branch z^s for real exponent s.
inline BigComplex pow(const BigComplex& z, const BigReal& s) {
  if (z.is_real() && z.real().sgn() > 0)
    return BigComplex(pow(z.real(), s), BigReal(z.prec()));
  BigComplex lz = log(z);
  return exp(BigComplex(lz.real() * s, lz.imag() * s));
}

}  // namespace ejasym
