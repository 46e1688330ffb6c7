// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cstdlib>
#include <string>

#include "ejasym/errors.hpp"
#include "ejasym/params.hpp"
#include "ejasym/precision.hpp"

namespace ejasym {

struct OracleValue {
  BigComplex value;
  BigReal tail_bound;  // certified bound on the omitted tail
  long long terms_used = 0;
};

inline long long default_budget() {
  if (const char* s = std::getenv("EJASYM_MAX_TERMS")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 10000000LL;
}

namespace detail {

// Certified bound on sum_{n > n0} e^{-x n^p} n^{-w} for x > 0.
// p >= 1: geometric ratio bound (the per-step decay factor is monotone).
// p < 1: block-doubling bound; each dyadic block [L, 2L) contributes at
// most L * max-term.
inline BigReal direct_tail_bound(const BigReal& x, const mpq_class& p,
                                 const mpq_class& w, long n0,
                                 mpfr_prec_t prec) {
  BigReal pr(p, prec), wr(w, prec);
  BigReal one(1L, prec);
  if (p >= 1) {
    BigReal g1 = pow(BigReal(n0 + 1, prec), pr);
    BigReal g2 = pow(BigReal(n0 + 2, prec), pr);
    BigReal rho = exp(-x * (g2 - g1));
    if (w < 0)
      rho *= pow(BigReal(n0 + 2, prec) / BigReal(n0 + 1, prec), -wr);
    if (rho >= one) {
      BigReal inf(prec);
      mpfr_set_inf(inf.mp(), 1);
      return inf;
    }
    BigReal t1 = exp(-x * g1) * pow(BigReal(n0 + 1, prec), -wr);
    return t1 / (one - rho);
  }
  BigReal bound(prec);
  BigReal L(n0 + 1, prec);
  BigReal floor = pow10(-(static_cast<long>(prec)), prec);  // ~2^-3.3prec
  for (int k = 0; k < 2048; ++k) {
    BigReal peak = exp(-x * pow(L, pr));
    BigReal wfac = (w >= 0) ? pow(L, -wr) : pow(L * 2, -wr);
    BigReal add = L * peak * wfac;
    bound += add;
    if (add < floor && k > 0) break;
    L *= 2;
  }
  return bound;
}

inline OracleValue direct_sum_impl(const mpq_class& p, const mpq_class& w,
                                   const BigComplex& a, const PrecisionCtx& ctx,
                                   const BigReal& tol, long long budget,
                                   bool alternating) {
  if (p <= 0) throw InvalidInput("p must be positive");
  require_sector(a);
  const mpfr_prec_t prec = ctx.bits();
  if (budget <= 0) budget = default_budget();
  BigReal x = a.real();
  BigReal pr(p, prec), wr(w, prec);
  BigComplex acc(prec);
  const long check_stride = (p >= 1) ? 1 : 32;
  for (long long n = 1; n <= budget; ++n) {
    BigReal nr(static_cast<long>(n), prec);
    BigReal np = pow(nr, pr);
    BigComplex t = exp(a * (-np)) * pow(nr, -wr);
    if (alternating && (n % 2 == 1)) t = -t;
    acc += t;
    if (abs(t) < tol && n % check_stride == 0) {
      BigReal bound =
          direct_tail_bound(x, p, w, static_cast<long>(n), prec);
      if (bound <= tol) return {acc, bound, n};
    }
  }
  throw BudgetError("direct summation exceeded budget of " +
                        std::to_string(budget) + " terms",
                    budget);
}

}  // namespace detail

// Certified direct summation of sum_{n>=1} e^{-a n^p} / n^w: stops once the
// remaining tail is provably below `tol` (absolute). BudgetError if the
// budget (default 1e7 terms, override EJASYM_MAX_TERMS) is exhausted first.
inline OracleValue direct_sum(const mpq_class& p, const mpq_class& w,
                              const BigComplex& a, const PrecisionCtx& ctx,
                              const BigReal& tol, long long budget = -1) {
  return detail::direct_sum_impl(p, w, a, ctx, tol, budget, false);
}

inline OracleValue direct_sum(const mpq_class& p, const mpq_class& w,
                              const BigComplex& a, const PrecisionCtx& ctx) {
  BigReal tol = pow10(-(ctx.total_digits() - 2), ctx.bits());
  return direct_sum(p, w, a, ctx, tol);
}

// Same, with alternating signs: sum_{n>=1} (-1)^n e^{-a n^p} / n^w.
inline OracleValue alternating_sum(const mpq_class& p, const mpq_class& w,
                                   const BigComplex& a, const PrecisionCtx& ctx,
                                   const BigReal& tol, long long budget = -1) {
  return detail::direct_sum_impl(p, w, a, ctx, tol, budget, true);
}

// Residual of the theta-function identity
//   S_2(a;0) = 1/2 sqrt(pi/a) - 1/2 + sqrt(pi/a) S_2(pi^2/a; 0),
// evaluated with two certified direct sums.
inline BigReal poisson_jacobi_residual(const BigComplex& a,
                                       const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-(ctx.total_digits() - 2), prec);
  BigComplex lhs = direct_sum(2, 0, a, ctx, tol).value;
  BigReal pi = const_pi(prec);
  BigComplex chi = BigComplex(pi * pi, BigReal(prec)) / a;
  BigComplex inner = direct_sum(2, 0, chi, ctx, tol).value;
  BigComplex half(BigReal(mpq_class(1, 2), prec), BigReal(prec));
  BigComplex root = pow(BigComplex(pi, BigReal(prec)) / a,
                        BigReal(mpq_class(1, 2), prec));
  BigComplex rhs = root * (half + inner) - half;
  return abs(lhs - rhs);
}

// Residual of the alternating-sign identity
//   sum_n (-1)^n e^{-a n^p}/n^w = 2^{1-w} S_p(2^p a; w) - S_p(a; w).
inline BigReal alternating_residual(const mpq_class& p, const mpq_class& w,
                                    const BigComplex& a,
                                    const PrecisionCtx& ctx) {
  const mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-(ctx.total_digits() - 2), prec);
  BigComplex lhs = alternating_sum(p, w, a, ctx, tol).value;
  BigReal two_p = pow(BigReal(2L, prec), BigReal(p, prec));
  BigComplex scaled = direct_sum(p, w, a * two_p, ctx, tol).value;
  BigComplex plain = direct_sum(p, w, a, ctx, tol).value;
  BigReal two_pow = pow(BigReal(2L, prec), BigReal(1 - w, prec));
  BigComplex rhs = scaled * two_pow - plain;
  return abs(lhs - rhs);
}

}  // namespace ejasym
