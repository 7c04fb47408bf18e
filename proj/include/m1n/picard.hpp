#pragma once

// Divisor classes and curve profiles on M-bar_{1,n} and M-bar_g.
//
// Pic(M-bar_{1,n}) (x) Q has basis lambda, delta_{0;S} for |S| >= 2. A
// subset S of {1, ..., n} is a 64-bit mask with bit (i - 1) set for
// marking i, so n is capped at 64. Boundary coefficients are kept in a
// sorted vector with zeros pruned; two classes are equal exactly when
// their stored data is equal.

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include <json.hpp>

#include "m1n/scalar.hpp"

namespace m1n {

using Mask = std::uint64_t;
inline constexpr int kMaxMarkings = 64;
// Largest n for which every subset of {1, ..., n} is enumerated.
inline constexpr int kMaxEnumeratedMarkings = 26;

inline Mask full_mask(int n) {
  return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}
inline int subset_size(Mask s) { return std::popcount(s); }
inline Mask bit_of(int marking) { return Mask{1} << (marking - 1); }

// Throws MarkingIndexError on any member outside {1, ..., n}.
Mask mask_of(int n, std::span<const int> members);
Mask mask_of(int n, std::initializer_list<int> members);
std::vector<int> members_of(Mask s);

void check_marking_count(int n);
// ResourceGuardError when n exceeds kMaxEnumeratedMarkings.
void check_enumerable(int n);

class MarkedSubset {
public:
  MarkedSubset(int n, Mask members);
  static MarkedSubset of(int n, std::initializer_list<int> members);

  int n() const { return n_; }
  Mask mask() const { return mask_; }
  int size() const { return subset_size(mask_); }
  bool contains(int marking) const { return (mask_ & bit_of(marking)) != 0; }
  std::vector<int> members() const { return members_of(mask_); }
  MarkedSubset complement() const { return {n_, full_mask(n_) & ~mask_}; }

  friend bool operator==(const MarkedSubset &, const MarkedSubset &) = default;

private:
  int n_;
  Mask mask_;
};

struct BoundaryTerm {
  Mask subset;
  Scalar coeff;
  friend bool operator==(const BoundaryTerm &, const BoundaryTerm &) = default;
};

// Sorted by subset, no zero coefficients, every subset of size >= 2.
using BoundaryMap = std::vector<BoundaryTerm>;

// Sorts, merges repeated subsets, drops zeros, and validates every key
// against n (MarkingIndexError / DomainError).
BoundaryMap canonical_boundary(int n, std::vector<BoundaryTerm> terms);
// Same, for input already sorted with unique keys; only prunes and
// validates.
BoundaryMap canonical_sorted_boundary(int n, std::vector<BoundaryTerm> terms);
const Scalar *find_coeff(const BoundaryMap &map, Mask subset);

class DivisorClassM1n {
public:
  explicit DivisorClassM1n(int n);
  DivisorClassM1n(int n, Scalar lambda, std::vector<BoundaryTerm> boundary);

  static DivisorClassM1n lambda_class(int n);
  static DivisorClassM1n boundary_divisor(int n, Mask subset);

  int n() const { return n_; }
  const Scalar &lambda() const { return lambda_; }
  const BoundaryMap &boundary() const { return boundary_; }
  Scalar coeff(Mask subset) const;
  bool is_zero() const { return lambda_.is_zero() && boundary_.empty(); }

  // Re-canonicalizes; a no-op on stored classes.
  DivisorClassM1n normalized() const;

  friend bool operator==(const DivisorClassM1n &, const DivisorClassM1n &) = default;

private:
  struct Trusted {};
  DivisorClassM1n(Trusted, int n, Scalar lambda, BoundaryMap boundary);
  friend DivisorClassM1n make_trusted_class(int, Scalar, BoundaryMap);

  int n_;
  Scalar lambda_;
  BoundaryMap boundary_;
};

// Skips validation. Caller guarantees `boundary` is already canonical.
DivisorClassM1n make_trusted_class(int n, Scalar lambda, BoundaryMap boundary);

// A one-parameter family recorded by its intersection numbers with the
// basis. Indices that are not listed pair to zero.
class CurveProfile {
public:
  explicit CurveProfile(int n);
  CurveProfile(int n, Scalar on_lambda, std::vector<BoundaryTerm> on_boundary);

  int n() const { return n_; }
  const Scalar &on_lambda() const { return on_lambda_; }
  const BoundaryMap &on_boundary() const { return on_boundary_; }
  Scalar value(Mask subset) const;

  friend bool operator==(const CurveProfile &, const CurveProfile &) = default;

private:
  int n_;
  Scalar on_lambda_;
  BoundaryMap on_boundary_;
};

// Class on M-bar_g in the basis lambda, delta_irr, delta_1 .. delta_{g/2}.
class DivisorClassMg {
public:
  DivisorClassMg(int g, Scalar lambda, Scalar delta_irr, std::vector<Scalar> delta);

  // From lambda * L + t * delta + sum u_i delta_i, where delta is the total
  // boundary class delta_irr + sum delta_i.
  static DivisorClassMg from_delta_form(int g, Scalar lambda, Scalar delta_total,
                                        std::vector<Scalar> delta);

  int g() const { return g_; }
  const Scalar &lambda() const { return lambda_; }
  const Scalar &delta_irr() const { return delta_irr_; }
  // delta_i for 1 <= i <= g/2.
  const Scalar &delta(int i) const;
  const std::vector<Scalar> &deltas() const { return delta_; }

  // Coefficients (t, u_1, ...) of the delta-form.
  Scalar delta_form_total() const { return delta_irr_; }
  std::vector<Scalar> delta_form_separating() const;

  DivisorClassMg scaled(const Scalar &s) const;
  friend DivisorClassMg operator+(const DivisorClassMg &a, const DivisorClassMg &b);

  friend bool operator==(const DivisorClassMg &, const DivisorClassMg &) = default;

private:
  int g_;
  Scalar lambda_;
  Scalar delta_irr_;
  std::vector<Scalar> delta_;
};

enum class SymbolKind { DeltaIrr, Psi, TotalDelta };
struct Symbol {
  SymbolKind kind;
  int index = 0; // marking for Psi
};

// Rewrites delta_irr, psi_i or the total boundary class in the basis.
DivisorClassM1n expand_symbol(const Symbol &symbol, int n);

struct ClassTerm {
  Scalar coeff;
  std::reference_wrapper<const DivisorClassM1n> cls;
};

DivisorClassM1n linear_combine(std::span<const ClassTerm> terms);
DivisorClassM1n linear_combine(std::initializer_list<ClassTerm> terms);

DivisorClassM1n operator+(const DivisorClassM1n &a, const DivisorClassM1n &b);
DivisorClassM1n operator-(const DivisorClassM1n &a, const DivisorClassM1n &b);
DivisorClassM1n operator*(const Scalar &s, const DivisorClassM1n &x);

Scalar pair(const CurveProfile &profile, const DivisorClassM1n &cls);

// sigma[i - 1] is the image of marking i.
using Permutation = std::vector<int>;

void check_permutation(const Permutation &sigma, int n);
Mask permute_mask(Mask s, const Permutation &sigma);
DivisorClassM1n permute_markings(const DivisorClassM1n &cls, const Permutation &sigma);
CurveProfile permute_markings(const CurveProfile &profile, const Permutation &sigma);
// (sigma o tau)(i) = sigma(tau(i)).
Permutation compose(const Permutation &sigma, const Permutation &tau);

// JSON file formats.
nlohmann::json to_json(const DivisorClassM1n &cls);
nlohmann::json to_json(const CurveProfile &profile);
nlohmann::json to_json(const DivisorClassMg &cls);
DivisorClassM1n class_m1n_from_json(const nlohmann::json &j);
CurveProfile profile_from_json(const nlohmann::json &j);
DivisorClassMg class_mg_from_json(const nlohmann::json &j);

} // namespace m1n
