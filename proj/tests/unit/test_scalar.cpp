#include <doctest.h>

#include "m1n/error.hpp"
#include "m1n/scalar.hpp"
#include "support.hpp"

using namespace m1n;

TEST_CASE("rationals stay in lowest terms") {
  CHECK(Rat::parse("6/-4").str() == "-3/2");
  CHECK(Rat::parse("10/5").str() == "2");
  CHECK(Rat::parse("-7").str() == "-7");
  CHECK(Rat(BigInt(0), BigInt(5)).str() == "0");
  CHECK((Rat(1) / Rat(3) + Rat(1) / Rat(6)).str() == "1/2");
  CHECK(Rat::parse("3/4").den() == 4);
  CHECK_THROWS_AS(Rat::parse("1/0"), DomainError);
  CHECK_THROWS_AS(Rat::parse("x"), ParseError);
  CHECK_THROWS_AS(Rat(1) / Rat(0), DomainError);
}

TEST_CASE("binomial coefficients") {
  CHECK(binom(4, 2) == Rat(6));
  CHECK(binom(6, 3) == Rat(20));
  CHECK(binom(3, 5) == Rat(0));
  CHECK(binom_int(40, 20).get_str() == "137846528820");
  CHECK(factorial(20).get_str() == "2432902008176640000");
}

TEST_CASE("polynomial evaluation") {
  const PolyRat a = PolyRat::param();
  CHECK(poly_eval(Scalar(13) * a - Scalar(11), Rat(1)) == Rat(2));
  CHECK(poly_eval(Scalar(-16), Rat(100)) == Rat(-16));
  CHECK(poly_eval(Scalar(12) * a - Scalar(12), Rat(1)) == Rat(0));
  CHECK(poly_eval(PolyRat{}, Rat(7)) == Rat(0));
}

TEST_CASE("polynomials are trimmed") {
  const PolyRat a = PolyRat::param();
  const PolyRat p = (a + Scalar(1)) - a;
  CHECK(p.degree() == 0);
  CHECK(p.is_constant());
  CHECK((a - a).degree() == -1);
  CHECK((a - a).is_zero());
  CHECK(PolyRat{Rat(1), Rat(0), Rat(0)}.coeffs().size() == 1);
  CHECK((Scalar(13) * a - Scalar(11)).pretty() == "13a - 11");
  CHECK((-(a + Scalar(1))).pretty() == "-a - 1");
  CHECK(Scalar(-16).pretty() == "-16");
  CHECK((a * a).degree() == 2);
}

TEST_CASE("exact division") {
  const PolyRat p{Rat(-12), Rat(12)};
  CHECK(p.divided_by(Rat(12)) == PolyRat{Rat(-1), Rat(1)});
  CHECK_THROWS_AS(p.divided_by(Rat(0)), DomainError);
}

TEST_CASE("json forms") {
  const PolyRat a = PolyRat::param();
  CHECK(rat_to_json(Rat::parse("-3/2")) == "-3/2");
  CHECK(poly_to_json(Scalar(13) * a - Scalar(11)) == nlohmann::json{"-11", "13"});
  CHECK(poly_to_json(PolyRat{}) == nlohmann::json::array());
  CHECK(scalar_to_json(Scalar(-16)) == "-16");
  CHECK(scalar_to_json(a) == nlohmann::json{"0", "1"});
  CHECK(scalar_from_json(nlohmann::json(4)) == Scalar(4));
  CHECK(scalar_from_json(nlohmann::json{"1/2", 3}) == PolyRat{Rat(BigInt(1), BigInt(2)), Rat(3)});
  CHECK_THROWS_AS(scalar_from_json(nlohmann::json(1.5)), ParseError);
  CHECK_THROWS_AS(rat_from_json(nlohmann::json::object()), ParseError);
}

TEST_CASE("field and ring axioms on random instances") {
  std::mt19937 rng(testing::kSeed);
  for (int t = 0; t < testing::kInstances; ++t) {
    const Rat x = testing::random_rat(rng), y = testing::random_rat(rng),
              z = testing::random_rat(rng);
    CHECK((x + y) * z == x * z + y * z);
    CHECK(x - x == Rat(0));
    if (!y.is_zero())
      CHECK((x / y) * y == x);
    CHECK(Rat::parse(x.str()) == x);

    const Scalar p = testing::random_scalar(rng, 3), q = testing::random_scalar(rng, 3),
                 r = testing::random_scalar(rng, 2);
    CHECK((p + q) * r == p * r + q * r);
    CHECK(p * q == q * p);
    CHECK(scalar_from_json(scalar_to_json(p)) == p);
    CHECK(scalar_from_json(poly_to_json(p)) == p);
    CHECK(poly_eval(p * q, x) == poly_eval(p, x) * poly_eval(q, x));
    const int d = (p * q).degree();
    if (!p.is_zero() && !q.is_zero())
      CHECK(d == p.degree() + q.degree());
  }
}

TEST_CASE("Pascal rule") {
  for (unsigned n = 1; n <= 40; ++n)
    for (unsigned k = 1; k <= n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}
