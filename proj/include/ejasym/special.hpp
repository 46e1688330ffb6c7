// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstddef>

#include "ejasym/errors.hpp"
#include "ejasym/precision.hpp"
#include "ejasym/rational.hpp"

namespace ejasym {

inline BigReal euler_const(const PrecisionCtx& ctx) {
  BigReal r(ctx.bits());
  mpfr_const_euler(r.mp(), MPFR_RNDN);
  return r;
}

namespace detail {

inline mpz_class floor_q(const mpq_class& q) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

inline bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace detail

// sin(pi x) for rational x with exact range reduction, so that integer and
// half-integer arguments come out exactly 0 / +-1.
inline BigReal sin_pi(const mpq_class& x, mpfr_prec_t prec) {
  mpq_class r = x - 2 * mpq_class(detail::floor_q(x / 2));  // r in [0, 2)
  int sign = 1;
  if (r >= 1) {
    r -= 1;
    sign = -1;
  }
  if (r > mpq_class(1, 2)) r = 1 - r;  // now r in [0, 1/2]
  if (r == 0) return BigReal(0L, prec);
  if (r == mpq_class(1, 2)) return BigReal(static_cast<long>(sign), prec);
  BigReal arg = const_pi(prec) * BigReal(r, prec);
  BigReal s = sin(arg);
  return sign < 0 ? -s : s;
}

inline BigReal cos_pi(const mpq_class& x, mpfr_prec_t prec) {
  return sin_pi(x + mpq_class(1, 2), prec);
}

namespace detail {

// log Gamma(z) for real z >= stirling threshold, via the divergent Stirling
// series with exact Bernoulli coefficients. Stops at the first term below
// `target`; the tail of the alternating-envelope series is then below the
// first omitted term.
inline BigReal log_gamma_stirling(const BigReal& z, const BigReal& target,
                                  mpfr_prec_t prec) {
  BigReal lz = log(z);
  BigReal half(mpq_class(1, 2), prec);
  BigReal two_pi = const_pi(prec) * 2;
  BigReal acc = (z - half) * lz - z + half * log(two_pi);
  BigReal zpow = BigReal(1L, prec) / z;  // z^{1-2k} for k = 1
  BigReal inv_z2 = zpow * zpow;
  BigReal prev_mag(prec);
  for (unsigned long k = 1; k < 100000; ++k) {
    mpq_class coef = bernoulli(2 * k) /
                     mpq_class(static_cast<long>(2 * k * (2 * k - 1)));
    BigReal t = BigReal(coef, prec) * zpow;
    BigReal mag = abs(t);
    if (k > 1 && mag >= prev_mag)
      throw ConvergenceError("stirling series diverged before target");
    acc += t;
    if (mag < target) return acc;
    prev_mag = mag;
    zpow *= inv_z2;
  }
  throw ConvergenceError("stirling series did not reach target");
}

inline long stirling_threshold(const PrecisionCtx& ctx) {
  return static_cast<long>(0.4 * static_cast<double>(ctx.total_digits())) + 8;
}

}  // namespace detail

// Gamma(x) for rational x; PoleError at nonpositive integers.
inline BigReal gamma_fn(const mpq_class& x, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  if (detail::is_integer(x) && x <= 0)
    throw PoleError("gamma pole at nonpositive integer " + x.get_str());
  if (x < mpq_class(1, 2)) {
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    BigReal denom = sin_pi(x, prec) * gamma_fn(1 - x, ctx);
    return const_pi(prec) / denom;
  }
  long T = detail::stirling_threshold(ctx);
  mpz_class fl = detail::floor_q(x);
  long m = 0;
  if (fl < T) m = T - fl.get_si();
  BigReal z = BigReal(x + m, prec);
  BigReal target = pow10(-(ctx.total_digits() + 4), prec);
  BigReal lg = detail::log_gamma_stirling(z, target, prec);
  BigReal g = exp(lg);
  if (m > 0) {
    BigReal prod(1L, prec);
    mpq_class f = x;
    for (long i = 0; i < m; ++i) {
      prod *= BigReal(f, prec);
      f += 1;
    }
    g /= prod;
  }
  return g;
}

// psi(x) = Gamma'(x)/Gamma(x) for rational x; PoleError at nonpositive
// integers.
inline BigReal digamma(const mpq_class& x, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  if (detail::is_integer(x) && x <= 0)
    throw PoleError("digamma pole at nonpositive integer " + x.get_str());
  if (x < mpq_class(1, 2)) {
    // psi(1-x) - psi(x) = pi cot(pi x)
    BigReal cot = cos_pi(x, prec) / sin_pi(x, prec);
    return digamma(1 - x, ctx) - const_pi(prec) * cot;
  }
  long T = detail::stirling_threshold(ctx);
  mpz_class fl = detail::floor_q(x);
  long m = 0;
  if (fl < T) m = T - fl.get_si();
  BigReal z = BigReal(x + m, prec);
  BigReal target = pow10(-(ctx.total_digits() + 4), prec);
  // psi(z) ~ log z - 1/(2z) - sum_k B_{2k}/(2k) z^{-2k}
  BigReal acc = log(z) - BigReal(1L, prec) / (z * 2);
  BigReal inv_z2 = BigReal(1L, prec) / (z * z);
  BigReal zpow = inv_z2;
  BigReal prev_mag(prec);
  for (unsigned long k = 1; k < 100000; ++k) {
    mpq_class coef = bernoulli(2 * k) / mpq_class(static_cast<long>(2 * k));
    BigReal t = BigReal(coef, prec) * zpow;
    BigReal mag = abs(t);
    if (k > 1 && mag >= prev_mag)
      throw ConvergenceError("digamma series diverged before target");
    acc -= t;
    if (mag < target) break;
    prev_mag = mag;
    zpow *= inv_z2;
  }
  if (m > 0) {
    // psi(x) = psi(x+m) - sum_{i<m} 1/(x+i)
    BigReal s(prec);
    mpq_class f = x;
    for (long i = 0; i < m; ++i) {
      s += BigReal(1L, prec) / BigReal(f, prec);
      f += 1;
    }
    acc -= s;
  }
  return acc;
}

namespace detail {

// Euler-Maclaurin evaluation of zeta(s) for real s >= 1/2, s != 1:
// zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//         + sum_k B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}.
// For real s the truncation error is bounded by the first omitted term.
inline BigReal zeta_euler_maclaurin(const mpq_class& s,
                                    const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal sr(s, prec);
  BigReal target = pow10(-(ctx.total_digits() + 4), prec);
  long N = std::max<long>(16, static_cast<long>(
                                  0.4 * static_cast<double>(ctx.total_digits())) +
                                  8);
  for (int attempt = 0; attempt < 8; ++attempt, N *= 2) {
    BigReal Nr(N, prec);
    BigReal acc(prec);
    for (long n = 1; n < N; ++n)
      acc += pow(BigReal(n, prec), -sr);
    acc += pow(Nr, BigReal(1L, prec) - sr) / (sr - 1);
    BigReal Npow = pow(Nr, -sr);  // running N^{-s-2k+1} for k = 0 -> N^{-s}
    acc += Npow / 2;
    BigReal inv_N2 = BigReal(1L, prec) / (Nr * Nr);
    // pochhammer (s)_{2k-1}: start k=1 -> (s)_1 = s
    BigReal poch = sr;
    Npow = Npow * Nr;  // N^{-s+1}; multiply by inv_N2 per k
    bool ok = false;
    BigReal prev_mag(prec);
    for (unsigned long k = 1; k < 100000; ++k) {
      Npow *= inv_N2;
      mpq_class coef = bernoulli(2 * k) / mpq_class(factorial_z(2 * k));
      BigReal t = BigReal(coef, prec) * poch * Npow;
      BigReal mag = abs(t);
      if (k > 1 && mag >= prev_mag) break;  // divergent tail reached
      acc += t;
      if (mag < target) {
        ok = true;
        break;
      }
      prev_mag = mag;
      // (s)_{2k+1} = (s)_{2k-1} (s+2k-1)(s+2k)
      poch *= (sr + static_cast<long>(2 * k - 1)) *
              (sr + static_cast<long>(2 * k));
    }
    if (ok) return acc;
  }
  throw ConvergenceError("euler-maclaurin zeta did not converge");
}

}  // namespace detail

// Riemann zeta at rational s. Exact values at integers s <= 0 (including
// the trivial zeros), PoleError at s = 1, functional equation below the
// critical line.
inline BigReal riemann_zeta(const mpq_class& s, const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  if (s == 1) throw PoleError("zeta pole at s = 1");
  if (detail::is_integer(s) && s <= 0) {
    // zeta(-n) = (-1)^n B_{n+1}/(n+1) with B_1 = -1/2
    unsigned long n = static_cast<unsigned long>(-s.get_num().get_si());
    mpq_class v = bernoulli(n + 1) / mpq_class(static_cast<long>(n + 1));
    if (n % 2 == 1) v = -v;
    return BigReal(v, prec);
  }
  if (s >= mpq_class(1, 2)) return detail::zeta_euler_maclaurin(s, ctx);
  // zeta(s) = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
  BigReal sr(s, prec);
  BigReal pi = const_pi(prec);
  BigReal pref = pow(BigReal(2L, prec), sr) * pow(pi, sr - 1) *
                 sin_pi(s / 2, prec) * gamma_fn(1 - s, ctx);
  return pref * detail::zeta_euler_maclaurin(1 - s, ctx);
}

// Convenience overloads: any finite BigReal is exactly rational.
inline BigReal gamma_fn(const BigReal& x, const PrecisionCtx& ctx) {
  return gamma_fn(x.to_rational(), ctx);
}
inline BigReal digamma(const BigReal& x, const PrecisionCtx& ctx) {
  return digamma(x.to_rational(), ctx);
}
inline BigReal riemann_zeta(const BigReal& s, const PrecisionCtx& ctx) {
  return riemann_zeta(s.to_rational(), ctx);
}

}  // namespace ejasym
