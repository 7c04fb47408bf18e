#include <doctest.h>

#include "m1n/corpus.hpp"
#include "m1n/error.hpp"
#include "m1n/gonal.hpp"

using namespace m1n;

TEST_CASE("three routes agree") {
  CHECK(pairing_direct(3) == Rat(2));
  CHECK(pairing_binomial(3) == Rat(2));
  CHECK(pairing_closed(3) == Rat(2));
  CHECK(pairing_direct(4) == Rat(-4118));
  CHECK(pairing_binomial(4) == Rat(-4118));
  CHECK(pairing_closed(4) == Rat(-4118));
  CHECK(pairing_direct(5) == Rat(-2031542));
  CHECK(pairing_closed(5) == Rat(-2031542));
  CHECK(pairing_closed(4) == bn_constant(4) * pairing_closed_unscaled(4));
}

TEST_CASE("binomial identities") {
  CHECK(binomial_terms(4).even_sum == Rat(1586));
  for (int d = 3; d <= 40; ++d) {
    const auto t = binomial_terms(d);
    CHECK(t.even_sum == t.even_sum_closed);
    CHECK(t.odd_sum == t.odd_sum_closed);
    CHECK(pairing_binomial(d) == pairing_closed(d));
  }
}

TEST_CASE("negativity") {
  const auto small = negativity_report(4);
  REQUIRE(small.size() == 2);
  CHECK(small[0].d == 3);
  CHECK(small[0].sign == 1);
  CHECK(small[0].value == Rat(2));
  CHECK(small[1].sign == -1);
  for (const auto &row : negativity_report(12))
    if (row.d >= 4)
      CHECK(row.sign == -1);
  CHECK(pairing_closed(10).sign() < 0);
  for (int d = 4; d <= 64; ++d)
    CHECK(pairing_closed(d).sign() < 0);
}

TEST_CASE("guards") {
  CHECK_THROWS_AS(pairing_direct(7), ResourceGuardError);
  CHECK_THROWS_AS(pairing_direct(5, 4), ResourceGuardError);
  CHECK_THROWS_AS(pairing_closed(2), DomainError);
  CHECK_THROWS_AS(binomial_terms(1), DomainError);
  CHECK_THROWS_AS(negativity_report(2), DomainError);
}
