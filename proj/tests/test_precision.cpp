// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "ejasym/precision.hpp"

using namespace ejasym;

TEST_CASE("precision context invariants") {
  PrecisionCtx ctx = PrecisionCtx::make(50);
  REQUIRE(ctx.working_digits == 50);
  REQUIRE(ctx.guard_digits == 10);
  REQUIRE(ctx.total_digits() == 60);
  REQUIRE(ctx.bits() >= 60 * 3.32);

  PrecisionCtx tiny = PrecisionCtx::make(3);
  REQUIRE(tiny.working_digits == 15);

  PrecisionCtx big = PrecisionCtx::make(400);
  REQUIRE(big.guard_digits == 40);
}

TEST_CASE("BigReal construction and exact round trips") {
  BigReal q(mpq_class(3, 8), 128);
  REQUIRE(q.to_rational() == mpq_class(3, 8));
  REQUIRE(q.to_double() == 0.375);

  BigReal z(128);
  REQUIRE(z.is_zero());
  REQUIRE(BigReal(-7L, 64).sgn() == -1);
  REQUIRE(BigReal("2.5e1", 64).to_long() == 25);
  REQUIRE_THROWS_AS(BigReal("not a number", 64), InvalidInput);
}

TEST_CASE("BigReal arithmetic carries the larger precision") {
  BigReal a(1L, 64);
  BigReal b(1L, 256);
  REQUIRE((a + b).prec() == 256);
  REQUIRE((b * a).prec() == 256);
  REQUIRE((a / b).prec() == 256);

  BigReal third(mpq_class(1, 3), 200);
  REQUIRE(third * 3 == BigReal(1L, 200));
  BigReal x(5L, 200);
  x /= 2;
  x *= 4;
  REQUIRE(x == BigReal(10L, 200));
}

TEST_CASE("BigReal comparisons and min/max") {
  BigReal a(2L, 64), b(3L, 64);
  REQUIRE(a < b);
  REQUIRE(b >= a);
  REQUIRE(a != b);
  REQUIRE(min(a, b) == a);
  REQUIRE(max(a, b) == b);
  REQUIRE(a < 3L);
  REQUIRE(a == 2L);
}

TEST_CASE("pow10 and exp10_estimate bracket the decimal magnitude") {
  mpfr_prec_t prec = 128;
  BigReal s = pow10(-3, prec) * 1000 - BigReal(1L, prec);
  REQUIRE(abs(s) < pow10(-30, prec));

  for (const char* v : {"1.5e-7", "9.99e4", "2e-40", "3.2", "1000"}) {
    BigReal x(v, prec);
    long e = x.exp10_estimate();
    REQUIRE(pow10(e, prec) <= abs(x));
    REQUIRE(abs(x) < pow10(e + 2, prec));
  }
  REQUIRE(BigReal(128).exp10_estimate() < -100000);
}

TEST_CASE("BigReal elementary functions agree with known values") {
  mpfr_prec_t prec = 256;
  BigReal tol = pow10(-70, prec);
  REQUIRE(abs(exp(log(BigReal(7L, prec))) - 7) < tol);
  REQUIRE(abs(sqrt(BigReal(2L, prec)) * sqrt(BigReal(2L, prec)) - 2) < tol);
  REQUIRE(abs(pow(BigReal(2L, prec), BigReal(mpq_class(1, 2), prec)) -
              sqrt(BigReal(2L, prec))) < tol);
  REQUIRE(abs(pow(BigReal(3L, prec), -2L) * 9 - 1) < tol);
  BigReal pi = const_pi(prec);
  REQUIRE(abs(sin(pi)) < tol);
  REQUIRE(abs(atan2(BigReal(1L, prec), BigReal(1L, prec)) * 4 - pi) < tol);
  REQUIRE(abs(hypot(BigReal(3L, prec), BigReal(4L, prec)) - 5) < tol);
}

TEST_CASE("BigComplex arithmetic") {
  mpfr_prec_t prec = 128;
  BigComplex a(BigReal(1L, prec), BigReal(2L, prec));
  BigComplex b(BigReal(3L, prec), BigReal(-1L, prec));
  BigComplex q = a / b;
  BigReal tol = pow10(-30, prec);
  REQUIRE(abs(q.real() - BigReal(mpq_class(1, 10), prec)) < tol);
  REQUIRE(abs(q.imag() - BigReal(mpq_class(7, 10), prec)) < tol);
  REQUIRE(abs((q * b - a)) < tol);
  REQUIRE(a.conj().imag() == BigReal(-2L, prec));
  REQUIRE(abs(abs(a) * abs(a) - 5) < tol);
}

TEST_CASE("BigComplex exp/log/pow use the principal branch") {
  mpfr_prec_t prec = 256;
  BigReal tol = pow10(-70, prec);
  BigReal pi = const_pi(prec);

  BigComplex minus_one(BigReal(-1L, prec), BigReal(prec));
  REQUIRE(abs(arg(minus_one) - pi) < tol);         // arg in (-pi, pi]
  BigComplex l = log(minus_one);
  REQUIRE(abs(l.real()) < tol);
  REQUIRE(abs(l.imag() - pi) < tol);

  BigComplex root = pow(minus_one, BigReal(mpq_class(1, 2), prec));
  REQUIRE(abs(root.real()) < tol);
  REQUIRE(abs(root.imag() - 1) < tol);

  // real-positive fast path keeps results exactly real
  BigComplex e = exp(BigComplex(BigReal(1L, prec)));
  REQUIRE(e.imag().is_zero());
  BigComplex pw = pow(BigComplex(BigReal(2L, prec)), BigReal(mpq_class(3, 2), prec));
  REQUIRE(pw.imag().is_zero());

  // exp(log(z)) = z off the axis
  BigComplex z(BigReal(mpq_class(-3, 7), prec), BigReal(mpq_class(2, 5), prec));
  REQUIRE(abs(exp(log(z)) - z) < tol);
}
