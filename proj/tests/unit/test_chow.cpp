#include <doctest.h>

#include "m1n/chow.hpp"
#include "m1n/error.hpp"
#include "support.hpp"

using namespace m1n;
using namespace m1n::chow;

namespace {

ChowDeg1 g(Gen x) { return ChowDeg1::gen(x); }

ChowDeg1 random_divisor(std::mt19937 &rng) {
  ChowDeg1 x;
  for (int k = 0; k < kGens; ++k)
    x[k] = testing::random_scalar(rng);
  return x;
}

} // namespace

TEST_CASE("top form entries") {
  const TopForm &t = top_form();
  CHECK(t(Zeta, Zeta, Zeta) == Rat(4));
  CHECK(t(E2, E2, E2) == Rat(-1));
  CHECK(t(Zeta, Zeta, F1) == Rat(2));
  CHECK(t(Zeta, Zeta, F2) == Rat(1));
  CHECK(t(Zeta, F1, F2) == Rat(1));
  CHECK(t(F1, F2, E1) == Rat(0));
  CHECK(t(E3, Zeta, E3) == Rat(-1));
  CHECK(t(E1, E1, F1) == Rat(-1));
  CHECK(t(E1, E2, E2) == Rat(0));
  int nonzero = 0;
  for (int i = 0; i < kGens; ++i)
    for (int j = i; j < kGens; ++j)
      for (int k = j; k < kGens; ++k)
        nonzero += !t(i, j, k).is_zero();
  CHECK(nonzero == 4 + 3 * 3);
}

TEST_CASE("triple products of named divisors") {
  for (Gen x : {Zeta, F1, F2, E1, E2, E3})
    CHECK(triple(sigma(), pi(), g(x)) == Scalar(0));
  CHECK(triple(sigma(), sigma(), g(F2)) == Scalar(-1));
  CHECK(triple(sigma(), sigma(), sigma()) == Scalar(4));
  CHECK(triple(sigma(), g(F1), g(F2)) == Scalar(1));
  CHECK(triple(g(E1), g(E1), pi()) == Scalar(-1));
  const Scalar a = PolyRat::param();
  CHECK(triple(family_divisor(), pi() - exceptional_sum(), g(F2)) == a + Scalar(1));
  CHECK(triple(family_divisor(), sigma(), g(F2)) == a - Scalar(2));
}

TEST_CASE("degree-2 classes") {
  CHECK(monomial_index(0, 1) == monomial_index(1, 0));
  CHECK(intersect(g(E1) * g(F1), g(Zeta)) == triple(g(E1), g(F1), g(Zeta)));
  CHECK(intersect(pushforward_ruling(2), g(E2)) == Scalar(-1));
  CHECK(intersect(pushforward_line(1), g(E1)) == Scalar(0));
  CHECK(intersect(pushforward_line(1), pi()) == Scalar(1));
  CHECK_THROWS_AS(pushforward_ruling(4), DomainError);
}

TEST_CASE("exceptional surfaces") {
  CHECK(restrict_to_exceptional(g(E1), 1) == F1Class{-1, 1});
  CHECK(restrict_to_exceptional(g(E2), 1) == F1Class{0, 0});
  CHECK(f1_pairing({1, 0}, {1, 0}) == Scalar(1));
  CHECK(f1_pairing({0, 1}, {0, 1}) == Scalar(0));
  CHECK(f1_canonical() == F1Class{-2, -1});
  CHECK(f1_genus({1, 0}) == Scalar(0));
  CHECK(f1_genus({2, 2}) == Scalar(2));
  CHECK(f1_genus({2, 3}) == Scalar(3));
  CHECK_THROWS_AS(restrict_to_exceptional(g(E1), 0), DomainError);
}

TEST_CASE("Chern classes") {
  const auto cd = chern_data();
  CHECK(Scalar(-1) * cd.k_y == sigma() + pi() + Scalar(2) * g(F1) + Scalar(2) * g(F2));
  CHECK(cd.k_x == cd.k_y + exceptional_sum());
  CHECK(intersect(cd.c2_ty, Scalar(-1) * cd.k_y) == Scalar(24));
  CHECK(intersect(cd.c2_tx, Scalar(-1) * cd.k_x) == Scalar(24));
  CHECK(intersect(c2_ty_with_extra_base_term(), Scalar(-1) * cd.k_y) == Scalar(32));
  CHECK(riemann_roch_chi(ChowDeg1{}) == Scalar(1));
}

TEST_CASE("family invariants") {
  const Scalar a = PolyRat::param();
  const auto inv = family_invariants();
  CHECK(inv.c2_td == Scalar(13) * a - Scalar(11));
  CHECK(inv.kd_squared == -(a + Scalar(1)));
  CHECK(inv.hodge_lambda == a - Scalar(1));
  CHECK(inv.hodge_lambda_rr == inv.hodge_lambda);
  CHECK(inv.rational_tails == a + Scalar(1));
  CHECK(inv.two_section_genus == a - Scalar(1));
  CHECK(inv.ramification == Scalar(2) * a);
  CHECK(inv.directrix_cycles == a - Scalar(2));
  CHECK(inv.irreducible_nodal == Scalar(10) * a - Scalar(8));
  CHECK(inv.irreducible_nodal + inv.rational_tails + Scalar(2) * inv.directrix_cycles ==
        inv.c2_td);
  CHECK(lambda_from_noether(Scalar(12) * a - Scalar(12)) == a - Scalar(1));
  CHECK_THROWS_AS(lambda_from_noether(Scalar(13) * a), IntegralityError);
}

TEST_CASE("intersection table") {
  const auto rows = lemma_table_check();
  CHECK(rows.size() >= 20);
  for (const auto &row : rows) {
    INFO(row.name);
    CHECK(row.ok());
  }
}

TEST_CASE("top form is symmetric and trilinear") {
  std::mt19937 rng(testing::kSeed + 6);
  for (int t = 0; t < testing::kInstances; ++t) {
    const auto x = random_divisor(rng), y = random_divisor(rng), z = random_divisor(rng),
               w = random_divisor(rng);
    const Scalar c = testing::random_scalar(rng);
    CHECK(triple(x, y, z) == triple(y, z, x));
    CHECK(triple(x, y, z) == triple(z, y, x));
    CHECK(triple(x + c * w, y, z) == triple(x, y, z) + c * triple(w, y, z));
    CHECK(intersect(x * y, z) == triple(x, y, z));
  }
}
