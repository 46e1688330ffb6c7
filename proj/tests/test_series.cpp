// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <gmpxx.h>

#include "ejasym/coefficients.hpp"
#include "ejasym/series.hpp"

using namespace ejasym;

namespace {

QSeries sample_unit(std::size_t order) {
  QSeries s(order);
  s[0] = 1;
  for (std::size_t n = 1; n < order; ++n)
    s[n] = mpq_class(static_cast<long>(n % 2 ? 1 : -2),
                     static_cast<long>(n + 3));
  return s;
}

}  // namespace

TEST_CASE("series ring operations") {
  QSeries a(4), b(4);
  a[0] = 1;
  a[1] = 1;  // 1 + x
  b[0] = 1;
  b[1] = -1;  // 1 - x
  QSeries prod = a * b;
  REQUIRE(prod[0] == 1);
  REQUIRE(prod[1] == 0);
  REQUIRE(prod[2] == -1);
  REQUIRE(prod[3] == 0);

  QSeries sum = a + b;
  REQUIRE(sum[0] == 2);
  REQUIRE(sum[1] == 0);
  REQUIRE((a - b)[1] == 2);
  REQUIRE(a.scaled(mpq_class(1, 2))[1] == mpq_class(1, 2));

  // products truncate at the shorter order
  QSeries c(6);
  c[0] = 1;
  REQUIRE((a * c).order() == 4);
}

TEST_CASE("reciprocal inverts exactly") {
  QSeries s = sample_unit(9);
  QSeries r = s.reciprocal();
  QSeries prod = s * r;
  REQUIRE(prod[0] == 1);
  for (std::size_t n = 1; n < prod.order(); ++n) REQUIRE(prod[n] == 0);

  QSeries zero_lead(3);
  REQUIRE_THROWS_AS(zero_lead.reciprocal(), InvalidInput);
}

TEST_CASE("exponential reproduces exp(x)") {
  QSeries x(8);
  x[1] = 1;
  QSeries e = x.exponential();
  mpz_class f = 1;
  for (std::size_t n = 0; n < 8; ++n) {
    if (n > 0) f *= static_cast<long>(n);
    REQUIRE(e[n] == mpq_class(1) / mpq_class(f));
  }

  QSeries bad(3);
  bad[0] = 1;
  REQUIRE_THROWS_AS(bad.exponential(), InvalidInput);
}

TEST_CASE("logarithm and exponential are mutually inverse") {
  QSeries s = sample_unit(10);
  QSeries back = s.logarithm().exponential();
  for (std::size_t n = 0; n < s.order(); ++n) REQUIRE(back[n] == s[n]);

  QSeries l(5);
  l[1] = mpq_class(2, 7);
  l[3] = mpq_class(-5, 3);
  QSeries round = l.exponential().logarithm();
  for (std::size_t n = 0; n < l.order(); ++n) REQUIRE(round[n] == l[n]);

  QSeries bad(3);
  bad[0] = 2;
  REQUIRE_THROWS_AS(bad.logarithm(), InvalidInput);
}

TEST_CASE("compose_scalar rescales the variable") {
  QSeries x(6);
  x[1] = 1;
  QSeries e = x.exponential().compose_scalar(mpq_class(3, 2));
  mpq_class lp = 1;
  mpz_class f = 1;
  for (std::size_t n = 0; n < 6; ++n) {
    if (n > 0) {
      f *= static_cast<long>(n);
      lp *= mpq_class(3, 2);
    }
    REQUIRE(e[n] == lp / mpq_class(f));
  }
}
