// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ejasym/special.hpp"

using namespace ejasym;

namespace {

BigReal mpfr_zeta_ref(const mpq_class& s, mpfr_prec_t prec) {
  BigReal sr(s, prec), r(prec);
  mpfr_zeta(r.mp(), sr.mp(), MPFR_RNDN);
  return r;
}

BigReal mpfr_gamma_ref(const mpq_class& x, mpfr_prec_t prec) {
  BigReal xr(x, prec), r(prec);
  mpfr_gamma(r.mp(), xr.mp(), MPFR_RNDN);
  return r;
}

BigReal mpfr_digamma_ref(const mpq_class& x, mpfr_prec_t prec) {
  BigReal xr(x, prec), r(prec);
  mpfr_digamma(r.mp(), xr.mp(), MPFR_RNDN);
  return r;
}

}  // namespace

TEST_CASE("sin_pi / cos_pi with exact argument reduction") {
  mpfr_prec_t prec = 256;
  BigReal tol = pow10(-70, prec);

  REQUIRE(sin_pi(mpq_class(0), prec).is_zero());
  REQUIRE(sin_pi(mpq_class(1), prec).is_zero());
  REQUIRE(sin_pi(mpq_class(-4), prec).is_zero());
  REQUIRE(sin_pi(mpq_class(1, 2), prec) == 1L);
  REQUIRE(sin_pi(mpq_class(3, 2), prec) == -1L);
  REQUIRE(cos_pi(mpq_class(1, 2), prec).is_zero());
  REQUIRE(cos_pi(mpq_class(0), prec) == 1L);
  REQUIRE(cos_pi(mpq_class(1), prec) == -1L);

  REQUIRE(abs(sin_pi(mpq_class(1, 6), prec) - BigReal(mpq_class(1, 2), prec)) < tol);
  REQUIRE(abs(cos_pi(mpq_class(1, 3), prec) - BigReal(mpq_class(1, 2), prec)) < tol);

  // reduction stays exact for arguments with enormous integer parts
  mpq_class huge = mpq_class(1, 6) + mpq_class(mpz_class("2000000000000000000000000000000"));
  REQUIRE(abs(sin_pi(huge, prec) - sin_pi(mpq_class(1, 6), prec)) < tol);
  mpq_class neg = mpq_class(1, 4) - mpq_class(mpz_class("99999999999999999999"));
  REQUIRE(abs(sin_pi(neg, prec) + sin_pi(mpq_class(1, 4), prec)) < tol);
}

TEST_CASE("gamma function at rational points") {
  PrecisionCtx ctx = PrecisionCtx::make(50);
  mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-48, prec);
  BigReal rpi = sqrt(const_pi(prec));

  REQUIRE(abs(gamma_fn(mpq_class(1), ctx) - 1) < tol);
  REQUIRE(abs(gamma_fn(mpq_class(5), ctx) - 24) < tol);
  REQUIRE(abs(gamma_fn(mpq_class(1, 2), ctx) - rpi) < tol);
  REQUIRE(abs(gamma_fn(mpq_class(-1, 2), ctx) + rpi * 2) < tol);

  // recurrence Gamma(x+1) = x Gamma(x)
  for (const mpq_class& x : {mpq_class(7, 3), mpq_class(-5, 4), mpq_class(22)}) {
    BigReal lhs = gamma_fn(x + 1, ctx);
    BigReal rhs = BigReal(x, prec) * gamma_fn(x, ctx);
    REQUIRE(abs(lhs - rhs) < tol * abs(rhs));
  }

  REQUIRE_THROWS_AS(gamma_fn(mpq_class(0), ctx), PoleError);
  REQUIRE_THROWS_AS(gamma_fn(mpq_class(-3), ctx), PoleError);
}

TEST_CASE("gamma matches the mpfr implementation") {
  PrecisionCtx ctx = PrecisionCtx::make(60);
  mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-58, prec);
  for (const mpq_class& x : {mpq_class(1, 3), mpq_class(41, 7), mpq_class(-7, 2),
                             mpq_class(-101, 13), mpq_class(13)}) {
    BigReal ref = mpfr_gamma_ref(x, prec);
    REQUIRE(abs(gamma_fn(x, ctx) - ref) < tol * abs(ref));
  }
}

TEST_CASE("digamma values, reflection, and mpfr agreement") {
  PrecisionCtx ctx = PrecisionCtx::make(50);
  mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-47, prec);
  BigReal gamma = euler_const(ctx);

  REQUIRE(abs(digamma(mpq_class(1), ctx) + gamma) < tol);
  REQUIRE(abs(digamma(mpq_class(2), ctx) - (BigReal(1L, prec) - gamma)) < tol);
  BigReal half = digamma(mpq_class(1, 2), ctx);
  REQUIRE(abs(half + gamma + log(BigReal(2L, prec)) * 2) < tol);

  // psi(1-x) - psi(x) = pi cot(pi x) at x = 1/3
  BigReal diff = digamma(mpq_class(2, 3), ctx) - digamma(mpq_class(1, 3), ctx);
  BigReal cot = const_pi(prec) / sqrt(BigReal(3L, prec));
  REQUIRE(abs(diff - cot) < tol);

  for (const mpq_class& x : {mpq_class(5, 3), mpq_class(-7, 2), mpq_class(9)}) {
    BigReal ref = mpfr_digamma_ref(x, prec);
    REQUIRE(abs(digamma(x, ctx) - ref) < tol * max(BigReal(1L, prec), abs(ref)));
  }

  REQUIRE_THROWS_AS(digamma(mpq_class(-2), ctx), PoleError);
}

TEST_CASE("zeta special values are exact") {
  PrecisionCtx ctx = PrecisionCtx::make(50);
  mpfr_prec_t prec = ctx.bits();

  REQUIRE(riemann_zeta(mpq_class(0), ctx) == BigReal(mpq_class(-1, 2), prec));
  REQUIRE(riemann_zeta(mpq_class(-1), ctx) == BigReal(mpq_class(-1, 12), prec));
  for (long k = 1; k <= 20; ++k) {
    REQUIRE(riemann_zeta(mpq_class(-2 * k), ctx).is_zero());
    mpq_class expect = -bernoulli(2 * k) / mpq_class(2 * k);
    REQUIRE(riemann_zeta(mpq_class(1 - 2 * k), ctx) == BigReal(expect, prec));
  }
  REQUIRE_THROWS_AS(riemann_zeta(mpq_class(1), ctx), PoleError);
}

TEST_CASE("zeta agrees with mpfr across both evaluation routes") {
  PrecisionCtx ctx = PrecisionCtx::make(60);
  mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-58, prec);
  REQUIRE(abs(riemann_zeta(mpq_class(2), ctx) -
              const_pi(prec) * const_pi(prec) / 6) < tol);
  for (const mpq_class& s :
       {mpq_class(3, 2), mpq_class(1, 3), mpq_class(-5, 2), mpq_class(7, 2),
        mpq_class(-12, 5), mpq_class(30), mpq_class(-31, 4)}) {
    BigReal ref = mpfr_zeta_ref(s, prec);
    REQUIRE(abs(riemann_zeta(s, ctx) - ref) <
            tol * max(BigReal(1L, prec), abs(ref)));
  }
}

TEST_CASE("BigReal overloads reduce to the rational implementations") {
  PrecisionCtx ctx = PrecisionCtx::make(40);
  mpfr_prec_t prec = ctx.bits();
  REQUIRE(riemann_zeta(BigReal("2.5", prec), ctx) ==
          riemann_zeta(mpq_class(5, 2), ctx));
  REQUIRE(gamma_fn(BigReal("0.25", prec), ctx) ==
          gamma_fn(mpq_class(1, 4), ctx));
  REQUIRE(digamma(BigReal("1.5", prec), ctx) ==
          digamma(mpq_class(3, 2), ctx));
}
