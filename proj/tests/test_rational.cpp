// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <thread>
#include <vector>

#include "ejasym/rational.hpp"

using namespace ejasym;

TEST_CASE("factorials, binomials, Pochhammer") {
  REQUIRE(factorial_z(0) == 1);
  REQUIRE(factorial_z(5) == 120);
  REQUIRE(factorial_z(12) == 479001600);
  REQUIRE(binomial_z(10, 3) == 120);
  REQUIRE(binomial_z(7, 0) == 1);
  REQUIRE(pochhammer(mpq_class(1, 2), 3) == mpq_class(15, 8));
  REQUIRE(pochhammer(mpq_class(4), 0) == 1);
  REQUIRE(pochhammer(mpq_class(-3), 5) == 0);
}

TEST_CASE("Bernoulli numbers") {
  REQUIRE(bernoulli(0) == 1);
  REQUIRE(bernoulli(1) == mpq_class(-1, 2));
  REQUIRE(bernoulli(2) == mpq_class(1, 6));
  REQUIRE(bernoulli(4) == mpq_class(-1, 30));
  REQUIRE(bernoulli(6) == mpq_class(1, 42));
  REQUIRE(bernoulli(8) == mpq_class(-1, 30));
  REQUIRE(bernoulli(10) == mpq_class(5, 66));
  REQUIRE(bernoulli(12) == mpq_class(-691, 2730));
  for (unsigned long n = 3; n <= 21; n += 2) REQUIRE(bernoulli(n) == 0);
}

TEST_CASE("scaled-gamma series coefficients") {
  auto g = stirling_coefficients(5);
  REQUIRE(g[0] == 1);
  REQUIRE(g[1] == mpq_class(-1, 12));
  REQUIRE(g[2] == mpq_class(1, 288));
  REQUIRE(g[3] == mpq_class(139, 51840));
  REQUIRE(g[4] == mpq_class(-571, 2488320));
}

TEST_CASE("sequence caches are prefix-stable") {
  mpq_class b20 = bernoulli(20);
  REQUIRE(bernoulli(4) == mpq_class(-1, 30));
  REQUIRE(bernoulli(20) == b20);

  auto g8 = stirling_coefficients(8);
  auto g3 = stirling_coefficients(3);
  for (std::size_t i = 0; i < g3.size(); ++i) REQUIRE(g3[i] == g8[i]);
}

TEST_CASE("sequence caches are usable from multiple threads") {
  std::vector<std::thread> ts;
  std::vector<mpq_class> got(4);
  for (int i = 0; i < 4; ++i)
    ts.emplace_back([i, &got] { got[i] = bernoulli(60 + 2 * i); });
  for (auto& t : ts) t.join();
  for (int i = 0; i < 4; ++i) REQUIRE(got[i] == bernoulli(60 + 2 * i));
}
