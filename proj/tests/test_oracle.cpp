// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <random>

#include "ejasym/expansions.hpp"
#include "ejasym/oracle.hpp"

using namespace ejasym;

namespace {

BigComplex real_arg(const char* s, mpfr_prec_t prec) {
  return BigComplex(BigReal(s, prec), BigReal(prec));
}

}  // namespace

TEST_CASE("direct sum against geometric closed forms") {
  PrecisionCtx ctx = PrecisionCtx::make(30);
  mpfr_prec_t prec = ctx.bits();
  BigReal a("0.7", prec);

  OracleValue s = direct_sum(1, 0, BigComplex(a), ctx);
  BigReal closed = BigReal(1L, prec) / (exp(a) - 1);
  REQUIRE(abs(s.value.real() - closed) <= s.tail_bound + pow10(-35, prec));
  REQUIRE(s.terms_used > 0);

  OracleValue alt = alternating_sum(1, 0, BigComplex(a), ctx,
                                    pow10(-35, prec));
  BigReal closed_alt = BigReal(-1L, prec) / (exp(a) + 1);
  REQUIRE(abs(alt.value.real() - closed_alt) < pow10(-30, prec));
}

TEST_CASE("direct sum rejects bad arguments") {
  PrecisionCtx ctx = PrecisionCtx::make(20);
  mpfr_prec_t prec = ctx.bits();
  REQUIRE_THROWS_AS(direct_sum(0, 1, real_arg("1", prec), ctx), InvalidInput);
  REQUIRE_THROWS_AS(direct_sum(2, 1, real_arg("-0.5", prec), ctx),
                    SectorError);
}

TEST_CASE("tail bound honesty across regimes") {
  PrecisionCtx ctx = PrecisionCtx::make(25);
  mpfr_prec_t prec = ctx.bits();
  std::mt19937 rng(911);
  std::uniform_int_distribution<long> pn(3, 12), pd(2, 4), wn(-8, 12),
      an(2, 8);
  for (int i = 0; i < 40; ++i) {
    mpq_class p(pn(rng), pd(rng));  // covers both bound routes across p = 1
    p.canonicalize();
    mpq_class w(wn(rng), 4);
    w.canonicalize();
    mpq_class av(an(rng), 4);
    av.canonicalize();
    BigComplex a(BigReal(av, prec), BigReal(prec));

    BigReal coarse_tol = pow10(-12, prec);
    BigReal fine_tol = pow10(-20, prec);
    OracleValue coarse = direct_sum(p, w, a, ctx, coarse_tol);
    OracleValue fine = direct_sum(p, w, a, ctx, fine_tol);
    REQUIRE(abs(coarse.value - fine.value) <=
            coarse.tail_bound + fine.tail_bound + pow10(-18, prec));
    REQUIRE(coarse.tail_bound <= coarse_tol);
  }
}

TEST_CASE("convergent expansion and oracle cross-check at p = 1/2") {
  PrecisionCtx ctx = PrecisionCtx::make(45);
  mpfr_prec_t prec = ctx.bits();
  BigComplex a = real_arg("1", prec);
  SeriesBlock blk = algebraic_part(mpq_class(1, 2), mpq_class(3, 2), a, ctx);
  OracleValue orc = direct_sum(mpq_class(1, 2), mpq_class(3, 2), a, ctx);
  REQUIRE(abs(orc.value - blk.total) < pow10(-40, prec));
}

TEST_CASE("theta-transformation residual") {
  PrecisionCtx ctx = PrecisionCtx::make(40);
  mpfr_prec_t prec = ctx.bits();
  REQUIRE(poisson_jacobi_residual(real_arg("1", prec), ctx) <
          pow10(-33, prec));
  BigComplex c(BigReal(2L, prec), BigReal(-1L, prec));
  REQUIRE(poisson_jacobi_residual(c, ctx) < pow10(-33, prec));
}

TEST_CASE("alternating-series identity residual") {
  PrecisionCtx ctx = PrecisionCtx::make(30);
  mpfr_prec_t prec = ctx.bits();
  REQUIRE(alternating_residual(mpq_class(3, 2), mpq_class(1, 2),
                               real_arg("0.7", prec), ctx) <
          pow10(-25, prec));
  REQUIRE(alternating_residual(2, 2, real_arg("1", prec), ctx) <
          pow10(-25, prec));
}

TEST_CASE("term budget is enforced") {
  PrecisionCtx ctx = PrecisionCtx::make(25);
  mpfr_prec_t prec = ctx.bits();
  BigReal tol = pow10(-25, prec);
  BigComplex slow = real_arg("0.001", prec);
  try {
    direct_sum(1, 0, slow, ctx, tol, 1000);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    REQUIRE(e.terms_used >= 1000);
  }

  setenv("EJASYM_MAX_TERMS", "500", 1);
  REQUIRE_THROWS_AS(direct_sum(1, 0, slow, ctx, tol), BudgetError);
  unsetenv("EJASYM_MAX_TERMS");
  REQUIRE_NOTHROW(direct_sum(1, 0, slow, ctx, tol));
}
