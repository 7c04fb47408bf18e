#pragma once

// Seeded generators shared by the property suites.

#include <random>

#include "m1n/picard.hpp"

namespace m1n::testing {

inline constexpr unsigned kSeed = 20240611;
inline constexpr int kInstances = 120;

inline Rat random_rat(std::mt19937 &rng, int span = 9) {
  std::uniform_int_distribution<int> num(-span, span), den(1, span);
  return Rat(BigInt(num(rng)), BigInt(den(rng)));
}

inline Scalar random_scalar(std::mt19937 &rng, int max_degree = 1) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  PolyRat::Coeffs c;
  for (int k = 0, d = deg(rng); k <= d; ++k)
    c.push_back(random_rat(rng));
  return PolyRat(c);
}

inline Mask random_subset(std::mt19937 &rng, int n) {
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  Mask s;
  do
    s = pick(rng);
  while (subset_size(s) < 2);
  return s;
}

inline std::vector<BoundaryTerm> random_terms(std::mt19937 &rng, int n, int count,
                                              int max_degree = 1) {
  std::vector<BoundaryTerm> terms;
  for (int k = 0; k < count; ++k)
    terms.push_back({random_subset(rng, n), random_scalar(rng, max_degree)});
  return terms;
}

inline DivisorClassM1n random_class(std::mt19937 &rng, int n, int count = 12) {
  return {n, random_scalar(rng), random_terms(rng, n, count)};
}

inline CurveProfile random_profile(std::mt19937 &rng, int n, int count = 12) {
  return {n, random_scalar(rng), random_terms(rng, n, count)};
}

inline Permutation random_permutation(std::mt19937 &rng, int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i)
    p[i] = i + 1;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline DivisorClassMg random_mg(std::mt19937 &rng, int g) {
  std::vector<Scalar> delta;
  for (int i = 1; i <= g / 2; ++i)
    delta.push_back(random_scalar(rng));
  return {g, random_scalar(rng), random_scalar(rng), delta};
}

} // namespace m1n::testing
