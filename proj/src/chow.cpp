#include "m1n/chow.hpp"

#include "m1n/error.hpp"

namespace m1n::chow {

ChowDeg1 ChowDeg1::gen(Gen g) {
  ChowDeg1 x;
  x.c[g] = Scalar(1);
  return x;
}

ChowDeg1 operator+(ChowDeg1 x, const ChowDeg1 &y) {
  for (int i = 0; i < kGens; ++i)
    x.c[i] += y.c[i];
  return x;
}

ChowDeg1 operator-(ChowDeg1 x, const ChowDeg1 &y) {
  for (int i = 0; i < kGens; ++i)
    x.c[i] -= y.c[i];
  return x;
}

ChowDeg1 operator*(const Scalar &s, ChowDeg1 x) {
  for (auto &v : x.c)
    v = s * v;
  return x;
}

int monomial_index(int i, int j) {
  if (i > j)
    std::swap(i, j);
  return i * kGens - i * (i - 1) / 2 + (j - i);
}

ChowDeg2 operator+(ChowDeg2 x, const ChowDeg2 &y) {
  for (std::size_t i = 0; i < x.c.size(); ++i)
    x.c[i] += y.c[i];
  return x;
}

ChowDeg2 operator-(ChowDeg2 x, const ChowDeg2 &y) {
  for (std::size_t i = 0; i < x.c.size(); ++i)
    x.c[i] -= y.c[i];
  return x;
}

ChowDeg2 operator*(const Scalar &s, ChowDeg2 x) {
  for (auto &v : x.c)
    v = s * v;
  return x;
}

ChowDeg2 operator*(const ChowDeg1 &x, const ChowDeg1 &y) {
  ChowDeg2 q;
  for (int i = 0; i < kGens; ++i) {
    if (x.c[i].is_zero())
      continue;
    for (int j = 0; j < kGens; ++j)
      if (!y.c[j].is_zero())
        q.c[monomial_index(i, j)] += x.c[i] * y.c[j];
  }
  return q;
}

ChowDeg1 sigma() {
  return ChowDeg1::gen(Zeta) - ChowDeg1::gen(F1) - Scalar(2) * ChowDeg1::gen(F2);
}

ChowDeg1 pi() { return ChowDeg1::gen(Zeta); }

ChowDeg1 exceptional_sum() {
  return ChowDeg1::gen(E1) + ChowDeg1::gen(E2) + ChowDeg1::gen(E3);
}

ChowDeg1 family_divisor() {
  const Scalar a = PolyRat::param();
  return Scalar(3) * pi() + (a - Scalar(2)) * ChowDeg1::gen(F1) -
         Scalar(2) * exceptional_sum();
}

namespace {

bool is_exceptional(int g) { return g >= E1; }

// zeta^z f1^u f2^v on Y, z + u + v = 3.
Rat evaluate_on_y(int z, int u, int v) {
  if (u >= 2 || v >= 2)
    return Rat(0);
  if (z == 0)
    return Rat(0); // pulled back from the surface Q
  if (z == 1)
    return Rat(u == 1 && v == 1 ? 1 : 0);
  // zeta^2 = c1(V) zeta - c2(V) with c1(V) = f1 + 2 f2, c2(V) = 0.
  return evaluate_on_y(z - 1, u + 1, v) + Rat(2) * evaluate_on_y(z - 1, u, v + 1);
}

F1Class restrict_gen(int g, int i) {
  if (g == Zeta || g == F1)
    return {Scalar(0), Scalar(1)};
  if (g == F2)
    return {};
  if (g - E1 + 1 == i)
    return {Scalar(-1), Scalar(1)};
  return {};
}

Rat evaluate_monomial(int a, int b, int c) {
  int gens[3] = {a, b, c};
  int exc = -1;
  int exc_count = 0;
  for (int g : gens) {
    if (!is_exceptional(g))
      continue;
    if (exc != -1 && g != exc)
      return Rat(0); // distinct exceptional divisors are disjoint
    exc = g;
    ++exc_count;
  }
  if (exc_count == 0) {
    int z = 0, u = 0, v = 0;
    for (int g : gens)
      (g == Zeta ? z : (g == F1 ? u : v))++;
    return evaluate_on_y(z, u, v);
  }
  // x y e_i = (x|E_i) . (y|E_i) on E_i.
  const int i = exc - E1 + 1;
  std::vector<int> rest;
  bool dropped = false;
  for (int g : gens) {
    if (g == exc && !dropped) {
      dropped = true;
      continue;
    }
    rest.push_back(g);
  }
  return f1_pairing(restrict_gen(rest[0], i), restrict_gen(rest[1], i)).constant_value();
}

TopForm build_top_form() {
  TopForm t;
  for (int i = 0; i < kGens; ++i)
    for (int j = 0; j < kGens; ++j)
      for (int k = 0; k < kGens; ++k)
        t.at(i, j, k) = evaluate_monomial(i, j, k);
  return t;
}

} // namespace

const TopForm &top_form() {
  static const TopForm table = build_top_form();
  return table;
}

Scalar triple(const ChowDeg1 &x, const ChowDeg1 &y, const ChowDeg1 &z) {
  const TopForm &t = top_form();
  Scalar acc;
  for (int i = 0; i < kGens; ++i) {
    if (x[i].is_zero())
      continue;
    for (int j = 0; j < kGens; ++j) {
      if (y[j].is_zero())
        continue;
      Scalar xy = x[i] * y[j];
      for (int k = 0; k < kGens; ++k)
        if (!z[k].is_zero() && !t(i, j, k).is_zero())
          acc += xy * z[k] * t(i, j, k);
    }
  }
  return acc;
}

Scalar intersect(const ChowDeg2 &q, const ChowDeg1 &x) {
  const TopForm &t = top_form();
  Scalar acc;
  for (int i = 0; i < kGens; ++i)
    for (int j = i; j < kGens; ++j) {
      const Scalar &qc = q.c[monomial_index(i, j)];
      if (qc.is_zero())
        continue;
      for (int k = 0; k < kGens; ++k)
        if (!x[k].is_zero() && !t(i, j, k).is_zero())
          acc += qc * x[k] * t(i, j, k);
    }
  return acc;
}

F1Class restrict_to_exceptional(const ChowDeg1 &x, int i) {
  if (i < 1 || i > 3)
    throw DomainError("exceptional divisor index must be 1, 2 or 3");
  F1Class out;
  for (int g = 0; g < kGens; ++g) {
    F1Class r = restrict_gen(g, i);
    out.l += x[g] * r.l;
    out.r += x[g] * r.r;
  }
  return out;
}

Scalar f1_pairing(const F1Class &x, const F1Class &y) {
  return x.l * y.l + x.l * y.r + x.r * y.l;
}

F1Class f1_canonical() { return {Scalar(-2), Scalar(-1)}; }

Scalar f1_genus(const F1Class &c) {
  F1Class ck{c.l + f1_canonical().l, c.r + f1_canonical().r};
  return Scalar(1) + f1_pairing(c, ck).divided_by(Rat(2));
}

namespace {
ChowDeg1 exceptional(int i) {
  if (i < 1 || i > 3)
    throw DomainError("exceptional divisor index must be 1, 2 or 3");
  return ChowDeg1::gen(static_cast<Gen>(E1 + i - 1));
}
} // namespace

ChowDeg2 pushforward_ruling(int i) { return ChowDeg1::gen(F1) * exceptional(i); }

ChowDeg2 pushforward_line(int i) {
  const ChowDeg1 e = exceptional(i);
  // e_i|E_i = r - l, so i_* l = i_* r - e_i^2.
  return pushforward_ruling(i) - e * e;
}

ChernData chern_data() {
  const ChowDeg1 f1 = ChowDeg1::gen(F1), f2 = ChowDeg1::gen(F2);
  const ChowDeg1 e = exceptional_sum();

  // 0 -> O(Sigma + Pi) -> T_Y -> p^* T_Q -> 0, c(T_Q) = (1 + 2 f1)(1 + 2 f2).
  const ChowDeg1 rel = sigma() + pi();
  const ChowDeg1 c1_q = Scalar(2) * f1 + Scalar(2) * f2;
  ChernData out;
  out.k_y = Scalar(-1) * (rel + c1_q);
  out.c2_ty = rel * c1_q + (Scalar(2) * f1) * (Scalar(2) * f2);

  // Blowup along smooth curves: K_X = beta^* K_Y + E.
  out.k_x = out.k_y + e;

  // c2(T_X) = i_*[-c1(omega_{E/Z})] + E K_X + beta^* c2(T_Y),
  // c1(omega_{E/Z}) = r - 2l on each E_i.
  ChowDeg2 minus_omega;
  for (int i = 1; i <= 3; ++i)
    minus_omega = minus_omega - (pushforward_ruling(i) - Scalar(2) * pushforward_line(i));
  out.c2_tx = minus_omega + e * out.k_x + out.c2_ty;
  return out;
}

ChowDeg2 c2_ty_with_extra_base_term() {
  const ChernData cd = chern_data();
  return (Scalar(-1) * cd.k_y) * (sigma() + pi()) + Scalar(4) * (ChowDeg1::gen(F1) * ChowDeg1::gen(F2));
}

Scalar riemann_roch_chi(const ChowDeg1 &l) {
  const ChernData cd = chern_data();
  const ChowDeg1 c1 = Scalar(-1) * cd.k_x;
  const ChowDeg2 &c2 = cd.c2_tx;
  Scalar chi = triple(l, l, l).divided_by(Rat(6));
  chi += triple(l, l, c1).divided_by(Rat(4));
  chi += intersect(c1 * c1 + c2, l).divided_by(Rat(12));
  chi += intersect(c2, c1).divided_by(Rat(24));
  return chi;
}

Scalar lambda_from_noether(const Scalar &twelve_lambda) {
  Scalar lambda = twelve_lambda.divided_by(Rat(12));
  for (const auto &c : lambda.coeffs())
    if (!c.is_integer())
      throw IntegralityError("12 lambda = " + twelve_lambda.pretty() + " is not divisible by 12");
  return lambda;
}

FamilyInvariants family_invariants() {
  const ChernData cd = chern_data();
  const ChowDeg1 d = family_divisor();
  const ChowDeg1 dk = d + cd.k_x;
  const ChowDeg1 f2 = ChowDeg1::gen(F2);

  FamilyInvariants inv;
  inv.kd_squared = triple(dk, dk, d);
  inv.c2_td = intersect(cd.c2_tx, d) + triple(dk, d, d);

  inv.hodge_lambda = lambda_from_noether(inv.kd_squared + inv.c2_td);

  inv.hodge_lambda_rr = riemann_roch_chi(ChowDeg1{}) - riemann_roch_chi(Scalar(-1) * d);

  inv.rational_tails = triple(d, pi() - exceptional_sum(), f2);
  inv.directrix_cycles = triple(d, sigma(), f2);

  const F1Class section = restrict_to_exceptional(d, 1);
  inv.two_section_genus = f1_genus(section);
  // Riemann-Hurwitz for a double cover of P^1: 2g - 2 = 2(-2) + R.
  inv.ramification = Scalar(2) * inv.two_section_genus + Scalar(2);

  inv.irreducible_nodal = Scalar(12) * inv.hodge_lambda - Scalar(2) * inv.directrix_cycles;
  return inv;
}

std::vector<TableEntry> lemma_table_check() {
  const ChowDeg1 zeta = pi(), f1 = ChowDeg1::gen(F1), f2 = ChowDeg1::gen(F2);
  const ChowDeg1 sig = sigma();
  std::vector<TableEntry> rows;

  // A degree-2 class vanishes numerically when it meets every generator in 0.
  auto vanishing = [&](const std::string &name, const ChowDeg1 &x, const ChowDeg1 &y) {
    Scalar witness;
    for (int g = 0; g < kGens && witness.is_zero(); ++g)
      witness = triple(x, y, ChowDeg1::gen(static_cast<Gen>(g)));
    rows.push_back({name + " = 0", Rat(0), witness});
  };
  vanishing("f1^2", f1, f1);
  vanishing("f2^2", f2, f2);
  for (int i = 1; i <= 3; ++i)
    vanishing("f2.e" + std::to_string(i), f2, ChowDeg1::gen(static_cast<Gen>(E1 + i - 1)));
  vanishing("Sigma.Pi", sig, zeta);
  for (int i = 1; i <= 3; ++i)
    vanishing("Sigma.e" + std::to_string(i), sig, ChowDeg1::gen(static_cast<Gen>(E1 + i - 1)));

  rows.push_back({"Pi^3", Rat(4), triple(zeta, zeta, zeta)});
  rows.push_back({"Sigma^3", Rat(4), triple(sig, sig, sig)});
  for (int i = 1; i <= 3; ++i) {
    const ChowDeg1 e = ChowDeg1::gen(static_cast<Gen>(E1 + i - 1));
    const std::string ei = "e" + std::to_string(i);
    rows.push_back({ei + "^3", Rat(-1), triple(e, e, e)});
    rows.push_back({ei + "^2.f1", Rat(-1), triple(e, e, f1)});
    rows.push_back({ei + "^2.Pi", Rat(-1), triple(e, e, zeta)});
  }
  rows.push_back({"Sigma^2.f1", Rat(-2), triple(sig, sig, f1)});
  rows.push_back({"Pi^2.f1", Rat(2), triple(zeta, zeta, f1)});
  rows.push_back({"Sigma^2.f2", Rat(-1), triple(sig, sig, f2)});
  rows.push_back({"Pi^2.f2", Rat(1), triple(zeta, zeta, f2)});
  rows.push_back({"Sigma.f1.f2", Rat(1), triple(sig, f1, f2)});
  rows.push_back({"Pi.f1.f2", Rat(1), triple(zeta, f1, f2)});
  return rows;
}

} // namespace m1n::chow
