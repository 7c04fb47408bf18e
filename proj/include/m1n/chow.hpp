#pragma once

// Intersection numbers on the threefold X = Bl_Z Y, where
// Y = P(O + O(1,2)) over Q = P^1 x P^1 and Z is three disjoint curves of
// class f_2 on the section Pi = zeta. Pic(X) = Z[zeta, f1, f2, e1, e2, e3].
//
// Degree-2 classes are kept as formal symmetric monomials; every number
// below reduces to triple products of divisors.

#include <array>
#include <string>
#include <vector>

#include "m1n/scalar.hpp"

namespace m1n::chow {

enum Gen : int { Zeta = 0, F1, F2, E1, E2, E3 };
inline constexpr int kGens = 6;

struct ChowDeg1 {
  std::array<Scalar, kGens> c{};

  static ChowDeg1 gen(Gen g);
  Scalar &operator[](int g) { return c[g]; }
  const Scalar &operator[](int g) const { return c[g]; }

  friend ChowDeg1 operator+(ChowDeg1 x, const ChowDeg1 &y);
  friend ChowDeg1 operator-(ChowDeg1 x, const ChowDeg1 &y);
  friend ChowDeg1 operator*(const Scalar &s, ChowDeg1 x);
  friend bool operator==(const ChowDeg1 &, const ChowDeg1 &) = default;
};

// Index of the unordered monomial g_i g_j among the 21.
int monomial_index(int i, int j);

struct ChowDeg2 {
  std::array<Scalar, 21> c{};

  friend ChowDeg2 operator+(ChowDeg2 x, const ChowDeg2 &y);
  friend ChowDeg2 operator-(ChowDeg2 x, const ChowDeg2 &y);
  friend ChowDeg2 operator*(const Scalar &s, ChowDeg2 x);
  friend bool operator==(const ChowDeg2 &, const ChowDeg2 &) = default;
};

ChowDeg2 operator*(const ChowDeg1 &x, const ChowDeg1 &y);

// Named divisors.
ChowDeg1 sigma(); // zeta - f1 - 2 f2, the directrix section
ChowDeg1 pi();    // zeta
ChowDeg1 exceptional_sum(); // e1 + e2 + e3
// D = 3 zeta + (a-2) f1 - 2e.
ChowDeg1 family_divisor();

// Symmetric trilinear form on the generators.
class TopForm {
public:
  const Rat &operator()(int i, int j, int k) const { return t_[(i * kGens + j) * kGens + k]; }
  Rat &at(int i, int j, int k) { return t_[(i * kGens + j) * kGens + k]; }

private:
  std::array<Rat, kGens * kGens * kGens> t_{};
};

// Derived from: zeta^2 = (f1 + 2 f2) zeta on Y, f1^2 = f2^2 = 0,
// zeta f1 f2 = 1, and evaluation on each exceptional surface E_i = F_1 via
// e_i|E_i = r - l, zeta|E_i = f1|E_i = r, f2|E_i = e_j|E_i = 0 (j != i).
const TopForm &top_form();

Scalar triple(const ChowDeg1 &x, const ChowDeg1 &y, const ChowDeg1 &z);
Scalar intersect(const ChowDeg2 &q, const ChowDeg1 &x);

// A class on F_1 = E_i written as l_coeff * l + r_coeff * r.
struct F1Class {
  Scalar l, r;
  friend bool operator==(const F1Class &, const F1Class &) = default;
};
F1Class restrict_to_exceptional(const ChowDeg1 &x, int i); // i in 1..3
// l^2 = 1, l.r = 1, r^2 = 0.
Scalar f1_pairing(const F1Class &x, const F1Class &y);
F1Class f1_canonical(); // -2l - r
// Arithmetic genus from adjunction on F_1.
Scalar f1_genus(const F1Class &c);

// Pushforwards to X of the line and ruling classes of E_i.
ChowDeg2 pushforward_ruling(int i); // f1 e_i
ChowDeg2 pushforward_line(int i);   // f1 e_i - e_i^2

struct ChernData {
  ChowDeg1 k_y;
  ChowDeg1 k_x;
  ChowDeg2 c2_ty;
  ChowDeg2 c2_tx;
};

ChernData chern_data();

// The value -K_Y (Sigma + Pi) + 4 f1 f2 obtained by reading the relative
// tangent sequence with an extra base term. It differs from c2_ty by
// 4 f1 f2 and fails c1 c2 = 24.
ChowDeg2 c2_ty_with_extra_base_term();

struct FamilyInvariants {
  Scalar kd_squared;        // (D + K_X)^2 D
  Scalar c2_td;             // c2(T_X) D + (D + K_X) D^2
  Scalar hodge_lambda;      // (kd_squared + c2_td) / 12
  Scalar hodge_lambda_rr;   // chi(O_X) - chi(O_X(-D))
  Scalar rational_tails;    // D (zeta - e) f2
  Scalar directrix_cycles;  // D Sigma f2
  Scalar two_section_genus; // genus of D|E_i
  Scalar ramification;      // branch points of D|E_i -> P^1
  Scalar irreducible_nodal; // 12 lambda - 2 directrix_cycles
};

// (K^2 + c2) / 12; IntegralityError unless every coefficient is an integer.
Scalar lambda_from_noether(const Scalar &twelve_lambda);

FamilyInvariants family_invariants();

// Degree-3 Riemann-Roch on X with Chern classes c1 = -K_X, c2.
Scalar riemann_roch_chi(const ChowDeg1 &line_bundle);

struct TableEntry {
  std::string name;
  Rat expected;
  Scalar actual;
  bool ok() const { return actual == Scalar(expected); }
};

// Every entry of the displayed intersection table, recomputed.
std::vector<TableEntry> lemma_table_check();

} // namespace m1n::chow
