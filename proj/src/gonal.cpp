#include "m1n/gonal.hpp"

#include <string>

#include "m1n/corpus.hpp"
#include "m1n/error.hpp"
#include "m1n/gluing.hpp"

namespace m1n {

namespace {
void check_gonality(int d) {
  if (d < 3)
    throw DomainError("d-gonal pairing needs d >= 3, got " + std::to_string(d));
}
} // namespace

Rat pairing_direct(int d, int cap) {
  check_gonality(d);
  if (d > cap)
    throw ResourceGuardError("direct route capped at d = " + std::to_string(cap) +
                             ", requested d = " + std::to_string(d));
  const int m = 2 * d - 2;
  const Scalar p = pair(gonal_profile(d), glue_pullback(bn_class(d), m));
  return p.constant_value();
}

BinomialTerms binomial_terms(int d) {
  check_gonality(d);
  const unsigned big_n = 2 * d - 2;
  const Rat d1(d - 1), d2(d - 2), dd(d);
  BinomialTerms t;
  t.pair_term = (Rat(2) - Rat(4) * dd / Rat(3)) * Rat(2) * pow(d1, 2 * d - 1);
  for (unsigned s = 1; s <= big_n; ++s)
    t.even_sum += Rat(2) * pow(d2, big_n - s) * Rat(long(s) - 1) * binom(big_n, s);
  t.even_sum_closed = Rat(2) * (pow(d1, big_n) + pow(d2, big_n));
  for (unsigned s = 1; s <= big_n - 1; ++s)
    t.odd_sum += d1 * pow(d2, big_n - 1 - s) * Rat(long(s)) * binom(big_n - 1, s);
  t.odd_sum_closed = Rat(2 * d - 3) * pow(d1, 2 * d - 3);
  t.unscaled = t.pair_term + dd / Rat(3) * t.even_sum + dd / Rat(3) * Rat(2 * d - 2) * t.odd_sum;
  return t;
}

Rat pairing_binomial(int d) {
  const BinomialTerms t = binomial_terms(d);
  if (t.even_sum != t.even_sum_closed)
    throw Error("even-subset sum disagrees with its closed form at d = " + std::to_string(d));
  // The odd sum carries the extra factor (d-1): (d-1)(2d-3)(d-1)^{2d-4}.
  if (t.odd_sum != t.odd_sum_closed)
    throw Error("odd-augmented sum disagrees with its closed form at d = " + std::to_string(d));
  return bn_constant(d) * t.unscaled;
}

Rat pairing_closed_unscaled(int d) {
  check_gonality(d);
  const Rat d1(d - 1), d2(d - 2), dd(d);
  return Rat(2) / Rat(3) *
         (dd * pow(d2, 2 * d - 2) - Rat(2) * Rat(d - 3) * pow(d1, 2 * d - 1));
}

Rat pairing_closed(int d) { return bn_constant(d) * pairing_closed_unscaled(d); }

std::vector<NegativityRow> negativity_report(int d_max) {
  if (d_max < 3)
    throw DomainError("negativity report needs d_max >= 3");
  std::vector<NegativityRow> rows;
  for (int d = 3; d <= d_max; ++d) {
    Rat u = pairing_closed_unscaled(d);
    Rat v = bn_constant(d) * u;
    rows.push_back({d, v, u, v.sign()});
  }
  return rows;
}

} // namespace m1n
