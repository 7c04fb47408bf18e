#pragma once

// Pullback along the gluing map M-bar_{1,2m} -> M-bar_{m+1}, which joins
// markings 2k-1 and 2k into a non-separating node for k = 1..m, and along
// the forgetful map M-bar_{1,n} -> M-bar_{1,m}.

#include <vector>

#include "m1n/picard.hpp"

namespace m1n {

// Subsets of {1, ..., 2m} that are unions of exactly i glued pairs.
struct LambdaFamily {
  int m;
  int i;
  std::vector<Mask> sets; // ascending; {0} when i == 0
};

LambdaFamily lambda_family(int i, int m);

// Mask of the pair {2k-1, 2k}.
inline Mask pair_mask(int k) { return Mask{3} << (2 * (k - 1)); }
// True when S is a (possibly empty) union of glued pairs.
bool is_pair_union(Mask s);

// Pullbacks of the basis symbols of Pic(M-bar_{m+1}).
DivisorClassM1n pullback_lambda(int m);
// (12 - 2m) lambda - sum_{|S| >= 2} (|S| - 1) delta_{0;S}.
DivisorClassM1n pullback_total_delta(int m);
// Valid for 1 <= i <= (m + 1) / 2.
DivisorClassM1n pullback_delta_i(int i, int m);
// pi^* delta - sum_i pi^* delta_i.
DivisorClassM1n pullback_delta_irr(int m);

// pi^* W on 2m markings; W must live on M-bar_{m+1}.
DivisorClassM1n glue_pullback(const DivisorClassMg &w, int m);

// f^* W for the map forgetting markings m+1..n.
DivisorClassM1n forget_pullback(const DivisorClassM1n &w, int n);

// f_* of a profile on n markings down to m markings. Throws DomainError
// when some supported T meets {1..m} in fewer than two markings.
CurveProfile pushforward_profile(const CurveProfile &p, int m);

// The same intersection data viewed on n >= p.n() markings (supported on
// subsets of the original markings); its pushforward is p.
CurveProfile canonical_lift(const CurveProfile &p, int n);

// Permutations of {1..2m} preserving the pair structure.
Permutation pair_swap(int m, int k);                   // 2k-1 <-> 2k
Permutation pair_block_permutation(const std::vector<int> &block_images); // pair k -> pair images[k-1]

} // namespace m1n
