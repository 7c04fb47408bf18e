#include <doctest.h>

#include "m1n/corpus.hpp"
#include "m1n/error.hpp"
#include "m1n/gluing.hpp"

using namespace m1n;

namespace {
Mask S(int n, std::initializer_list<int> members) { return mask_of(n, members); }
} // namespace

TEST_CASE("Brill-Noether classes") {
  CHECK(bn_class(3) == DivisorClassMg(5, 8, -1, {Scalar(-4), Scalar(-6)}));
  CHECK(bn_constant(3) == Rat(1));
  CHECK(bn_constant(4) == Rat(BigInt(3), BigInt(2)));
  CHECK(bn_constant(5) == Rat(3));
  CHECK(bn_class(7).g() == 13);
  for (int d = 3; d <= 9; ++d)
    CHECK(bn_class_delta_form(d) == bn_class(d));
  CHECK_THROWS_AS(bn_class(2), DomainError);
}

TEST_CASE("Gieseker-Petri class") {
  const auto gp = gp_class();
  CHECK(gp.g() == 4);
  CHECK(gp.lambda() == Scalar(34));
  CHECK(gp.delta(2) == Scalar(-18));
  CHECK(gp_class_delta_form() == gp);
}

TEST_CASE("golden coefficients") {
  const auto trig = golden_pullback(Golden::Trigonal);
  CHECK(trig.coeff(S(8, {1, 2})) == Scalar(-2));
  CHECK(trig.coeff(S(8, {1, 3})) == Scalar(1));
  CHECK(trig.boundary().size() == 247 - 4); // only the four Lambda_3 sets vanish
  const auto gp = golden_pullback(Golden::Gp);
  CHECK(gp.coeff(S(6, {1, 2, 3, 4})) == Scalar(-2));
}

TEST_CASE("profiles") {
  const auto g3 = gonal_profile(3);
  CHECK(g3.n() == 8);
  CHECK(g3.value(S(8, {1, 2})) == Scalar(16));
  for (Mask s = 1; s <= full_mask(8); ++s)
    if (subset_size(s) >= 2 && (s & S(8, {1, 3, 5, 7})) == 0)
      CHECK(g3.value(s) == Scalar(2));

  const Scalar a = PolyRat::param();
  CHECK(gp_profile().value(S(6, {1, 3, 5})) == a + Scalar(1));
  CHECK(bnd_profile().value(S(8, {1, 2, 3, 4, 5, 6, 7})) == Scalar(-1));
  CHECK(trig_profile().n() == 8);

  CHECK(ProfileName::parse("gonal:5").d == 5);
  CHECK(ProfileName::parse("gonal:5").str() == "gonal:5");
  CHECK(profile(ProfileName::parse("trig")) == trig_profile());
  CHECK_THROWS_AS(ProfileName::parse("cubic"), DomainError);
  CHECK_THROWS_AS(ProfileName::parse("gonal:x"), DomainError);
  CHECK_THROWS_AS(gonal_profile(2), DomainError);
}

TEST_CASE("profile supports respect n") {
  for (const auto &p : {trig_profile(), bnd_profile(), gonal_profile(3), gonal_profile(4),
                        gp_profile()})
    for (const auto &t : p.on_boundary()) {
      CHECK(subset_size(t.subset) >= 2);
      CHECK((t.subset & ~full_mask(p.n())) == 0);
    }
}

TEST_CASE("gonal profiles are pair-symmetric") {
  for (int d = 3; d <= 5; ++d) {
    const int m = 2 * d - 2;
    const auto p = gonal_profile(d);
    std::vector<int> blocks(m);
    for (int k = 0; k < m; ++k)
      blocks[k] = (k + 1) % m + 1;
    CHECK(permute_markings(p, pair_block_permutation(blocks)) == p);
  }
}
