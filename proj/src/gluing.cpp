#include "m1n/gluing.hpp"

#include <algorithm>
#include <string>

#include "m1n/error.hpp"

namespace m1n {

namespace {

void check_pair_count(int m) {
  if (m < 1 || 2 * m > kMaxMarkings)
    throw DomainError("pair count must lie in [1, 32], got " + std::to_string(m));
}

// Spread an m-bit selection of pairs into the corresponding 2m-bit subset.
Mask spread_pairs(Mask chosen) {
  Mask s = 0;
  while (chosen) {
    int k = std::countr_zero(chosen) + 1;
    s |= pair_mask(k);
    chosen &= chosen - 1;
  }
  return s;
}

} // namespace

bool is_pair_union(Mask s) {
  constexpr Mask odd = 0x5555555555555555ULL;
  return ((s & odd) << 1) == (s & ~odd);
}

LambdaFamily lambda_family(int i, int m) {
  check_pair_count(m);
  if (i < 0 || i > m)
    throw DomainError("Lambda_" + std::to_string(i) + " needs 0 <= i <= m = " + std::to_string(m));
  LambdaFamily fam{m, i, {}};
  if (i == 0) {
    fam.sets.push_back(0);
    return fam;
  }
  // Gosper's hack over i-element subsets of the m pairs.
  Mask chosen = (Mask{1} << i) - 1;
  const Mask limit = Mask{1} << m;
  while (chosen < limit) {
    fam.sets.push_back(spread_pairs(chosen));
    Mask c = chosen & (~chosen + 1);
    Mask r = chosen + c;
    if (r == 0)
      break;
    chosen = (((r ^ chosen) >> 2) / c) | r;
  }
  std::sort(fam.sets.begin(), fam.sets.end());
  return fam;
}

DivisorClassM1n pullback_lambda(int m) {
  check_pair_count(m);
  return DivisorClassM1n::lambda_class(2 * m);
}

DivisorClassM1n pullback_total_delta(int m) {
  check_pair_count(m);
  const int n = 2 * m;
  check_enumerable(n);
  BoundaryMap terms;
  terms.reserve(full_mask(n));
  for (Mask s = 1; s <= full_mask(n); ++s) {
    int size = subset_size(s);
    if (size >= 2)
      terms.push_back({s, Scalar(-(size - 1))});
  }
  return make_trusted_class(n, Scalar(12 - 2 * m), std::move(terms));
}

DivisorClassM1n pullback_delta_i(int i, int m) {
  check_pair_count(m);
  if (i < 1 || 2 * i > m + 1)
    throw DomainError("pi^* delta_" + std::to_string(i) + " is defined for 1 <= i <= (m+1)/2, m = " +
                      std::to_string(m));
  const int n = 2 * m;
  std::vector<BoundaryTerm> terms;
  for (Mask s : lambda_family(i, m).sets)
    terms.push_back({s, Scalar(1)});
  // When m is odd and i = (m+1)/2 the complement sets coincide with the
  // Lambda_i sets; only the first sum is kept.
  const bool middle = (m % 2 == 1) && (2 * i == m + 1);
  if (!middle)
    for (Mask t : lambda_family(i - 1, m).sets)
      terms.push_back({full_mask(n) & ~t, Scalar(1)});
  return DivisorClassM1n(n, Scalar(), std::move(terms));
}

DivisorClassM1n pullback_delta_irr(int m) {
  const DivisorClassM1n total = pullback_total_delta(m);
  std::vector<DivisorClassM1n> seps;
  for (int i = 1; 2 * i <= m + 1; ++i)
    seps.push_back(pullback_delta_i(i, m));
  std::vector<ClassTerm> terms{{Scalar(1), total}};
  for (const auto &s : seps)
    terms.push_back({Scalar(-1), s});
  return linear_combine(terms);
}

DivisorClassM1n glue_pullback(const DivisorClassMg &w, int m) {
  if (w.g() != m + 1)
    throw SpaceMismatchError("gluing " + std::to_string(m) + " pairs lands in M-bar_" +
                             std::to_string(m + 1) + ", class lives on M-bar_" +
                             std::to_string(w.g()));
  if (m < 2)
    throw DomainError("gluing pullback needs m >= 2");
  const int n = 2 * m;

  // W = l*lambda + t*delta_irr + sum w_i delta_i
  //   = l*lambda + t*delta + sum (w_i - t) delta_i, using delta_irr = delta - sum delta_i.
  const DivisorClassM1n lam = pullback_lambda(m);
  const DivisorClassM1n total =
      w.delta_irr().is_zero() ? DivisorClassM1n(n) : pullback_total_delta(m);
  std::vector<DivisorClassM1n> seps;
  for (int i = 1; i <= w.g() / 2; ++i)
    seps.push_back(pullback_delta_i(i, m));

  std::vector<ClassTerm> terms{{w.lambda(), lam}, {w.delta_irr(), total}};
  for (int i = 1; i <= w.g() / 2; ++i)
    terms.push_back({w.delta(i) - w.delta_irr(), seps[i - 1]});
  return linear_combine(terms);
}

DivisorClassM1n forget_pullback(const DivisorClassM1n &w, int n) {
  const int m = w.n();
  check_marking_count(n);
  if (n < m)
    throw DomainError("forgetful pullback from " + std::to_string(m) + " to " + std::to_string(n) +
                      " markings");
  if (n == m)
    return w;
  const int extra = n - m;
  check_enumerable(extra);
  const Mask tails = Mask{1} << extra;
  if (w.boundary().size() * tails > (std::size_t{1} << 27))
    throw ResourceGuardError("forgetful pullback would produce more than 2^27 boundary terms");

  // f^* delta_{0;S} = sum of delta_{0;T} over T with T cap {1..m} = S.
  // Iterating the new markings in the outer loop keeps the output sorted.
  BoundaryMap out;
  out.reserve(w.boundary().size() * tails);
  for (Mask u = 0; u < tails; ++u)
    for (const auto &t : w.boundary())
      out.push_back({t.subset | (u << m), t.coeff});
  return make_trusted_class(n, w.lambda(), std::move(out));
}

CurveProfile pushforward_profile(const CurveProfile &p, int m) {
  check_marking_count(m);
  if (m > p.n())
    throw DomainError("cannot push a profile on " + std::to_string(p.n()) + " markings to " +
                      std::to_string(m));
  std::vector<BoundaryTerm> terms;
  for (const auto &t : p.on_boundary()) {
    Mask s = t.subset & full_mask(m);
    if (subset_size(s) < 2)
      throw DomainError("profile meets a boundary divisor contracted by the forgetful map");
    terms.push_back({s, t.coeff});
  }
  return CurveProfile(m, p.on_lambda(), std::move(terms));
}

CurveProfile canonical_lift(const CurveProfile &p, int n) {
  check_marking_count(n);
  if (n < p.n())
    throw DomainError("cannot lift a profile on " + std::to_string(p.n()) + " markings to " +
                      std::to_string(n));
  return CurveProfile(n, p.on_lambda(),
                      std::vector<BoundaryTerm>(p.on_boundary().begin(), p.on_boundary().end()));
}

Permutation pair_swap(int m, int k) {
  check_pair_count(m);
  if (k < 1 || k > m)
    throw DomainError("pair index out of range");
  Permutation s(2 * m);
  for (int i = 1; i <= 2 * m; ++i)
    s[i - 1] = i;
  std::swap(s[2 * k - 2], s[2 * k - 1]);
  return s;
}

Permutation pair_block_permutation(const std::vector<int> &block_images) {
  const int m = static_cast<int>(block_images.size());
  check_pair_count(m);
  check_permutation(block_images, m);
  Permutation s(2 * m);
  for (int k = 1; k <= m; ++k) {
    int img = block_images[k - 1];
    s[2 * k - 2] = 2 * img - 1;
    s[2 * k - 1] = 2 * img;
  }
  return s;
}

} // namespace m1n
