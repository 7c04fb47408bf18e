#pragma once

// Three evaluation routes for the pairing of the d-gonal test pencil B
// with pi^* BN^1_d on M-bar_{1,4d-4}. All routes include the factor c, so
// each returns the intersection number itself.

#include <vector>

#include "m1n/scalar.hpp"

namespace m1n {

inline constexpr int kDefaultDirectMaxD = 6;

// Full sparse enumeration: pair(gonal profile, glue_pullback(bn_class(d))).
// ResourceGuardError when d > cap.
Rat pairing_direct(int d, int cap = kDefaultDirectMaxD);

// Terms of the binomial-sum expression (before the factor c).
struct BinomialTerms {
  Rat pair_term;      // (2 - 4d/3) * 2 (d-1)^{2d-1}
  Rat even_sum;       // sum_{s=1}^{2d-2} 2 (d-2)^{2d-2-s} (s-1) C(2d-2, s)
  Rat even_sum_closed; // 2 ((d-1)^{2d-2} + (d-2)^{2d-2})
  Rat odd_sum;        // sum_{s=1}^{2d-3} (d-1) (d-2)^{2d-3-s} s C(2d-3, s)
  Rat odd_sum_closed; // (2d-3) (d-1)^{2d-3}
  Rat unscaled;       // pair_term + (d/3) even_sum + (d/3)(2d-2) odd_sum
};

BinomialTerms binomial_terms(int d);

// c * binomial_terms(d).unscaled. Throws Error if either partial sum
// disagrees with its closed form.
Rat pairing_binomial(int d);

// c * (2/3) (d (d-2)^{2d-2} - 2 (d-3) (d-1)^{2d-1}).
Rat pairing_closed(int d);
// The same without the factor c.
Rat pairing_closed_unscaled(int d);

struct NegativityRow {
  int d;
  Rat value;    // scaled by c
  Rat unscaled; // value / c
  int sign;
};

std::vector<NegativityRow> negativity_report(int d_max);

} // namespace m1n
