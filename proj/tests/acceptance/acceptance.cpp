// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "m1n/certify.hpp"
#include "m1n/chow.hpp"
#include "m1n/corpus.hpp"
#include "m1n/gluing.hpp"
#include "m1n/gonal.hpp"
#include "m1n/report.hpp"

using namespace m1n;

namespace {

// Collects the first failure message of a criterion.
struct Verdict {
  bool ok = true;
  std::ostringstream why;

  void require(bool cond, const std::string &what) {
    if (!cond && ok) {
      ok = false;
      why << what;
    }
  }
  template <class A, class B> void equal(const A &expected, const B &actual, const std::string &what) {
    if (!(expected == actual) && ok) {
      ok = false;
      why << what << ": expected " << expected << ", got " << actual;
    }
  }
};

bool run_criterion(int id, const std::string &title, double budget_ms,
                   const std::function<void(Verdict &)> &body) {
  Verdict v;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(v);
  } catch (const std::exception &e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (budget_ms > 0 && ms > budget_ms)
    v.require(false, "runtime " + std::to_string(ms) + " ms over budget");
  std::printf("%s criterion %d: %-48s %9.1f ms%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(),
              ms, v.ok ? "" : "  -- ", v.why.str().c_str());
  return v.ok;
}

bool report_clean(const std::vector<CheckResult> &rows, Verdict &v) {
  for (const auto &r : rows)
    v.require(r.pass, r.module + "/" + r.check + " expected " + r.expected.dump() + " actual " +
                          r.actual.dump());
  return v.ok;
}

constexpr unsigned kSeed = 7211;
constexpr int kInstances = 100;

Rat random_rat(std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
  return Rat(BigInt(num(rng)), BigInt(den(rng)));
}

Scalar random_scalar(std::mt19937 &rng) { return {random_rat(rng), random_rat(rng)}; }

std::vector<BoundaryTerm> random_terms(std::mt19937 &rng, int n) {
  std::uniform_int_distribution<Mask> pick(0, full_mask(n));
  std::vector<BoundaryTerm> terms;
  while (terms.size() < 15) {
    const Mask s = pick(rng);
    if (subset_size(s) >= 2)
      terms.push_back({s, random_scalar(rng)});
  }
  return terms;
}

DivisorClassMg random_mg(std::mt19937 &rng, int g) {
  std::vector<Scalar> delta;
  for (int i = 1; i <= g / 2; ++i)
    delta.push_back(random_scalar(rng));
  return {g, random_scalar(rng), random_scalar(rng), delta};
}

Permutation random_pair_symmetry(std::mt19937 &rng, int m) {
  std::vector<int> blocks(m);
  for (int k = 0; k < m; ++k)
    blocks[k] = k + 1;
  std::shuffle(blocks.begin(), blocks.end(), rng);
  Permutation p = pair_block_permutation(blocks);
  for (int k = 1; k <= m; ++k)
    if (rng() & 1)
      p = compose(pair_swap(m, k), p);
  return p;
}

} // namespace

int main() {
  VerifyOptions opts;
  bool all = true;

  all &= run_criterion(1, "trigonal pullback matches golden expansion", 1000, [&](Verdict &v) {
    const auto rows = compare_classes("trigonal", "golden", golden_pullback(Golden::Trigonal),
                                      glue_pullback(bn_class(3), 4), "");
    report_clean(rows, v);
    v.equal(std::string("\"248\""), rows.at(rows.size() - 2).actual.dump(), "coordinates");
  });

  all &= run_criterion(2, "gp pullback matches golden expansion", 1000, [&](Verdict &v) {
    const auto pulled = glue_pullback(gp_class(), 3);
    report_clean(compare_classes("gp", "golden", golden_pullback(Golden::Gp), pulled, ""), v);
    v.equal(Scalar(10), pulled.lambda(), "lambda");
    for (Mask s : lambda_family(1, 3).sets)
      v.equal(Scalar(-6), pulled.coeff(s), "pair coefficient");
    for (Mask s : lambda_family(2, 3).sets)
      v.equal(Scalar(-2), pulled.coeff(s), "Lambda_2 coefficient");
    v.equal(Scalar(10), pulled.coeff(full_mask(6)), "full set");
  });

  all &= run_criterion(3, "trigonal and boundary pencil pairings", 1000, [&](Verdict &v) {
    const auto pulled = glue_pullback(bn_class(3), 4);
    v.equal(Scalar(-1), pair(trig_profile(), pulled), "B . pi^*BN");
    v.equal(Scalar(-2), pair(bnd_profile(), pulled), "C . pi^*BN");
  });

  all &= run_criterion(4, "gonal routes agree; signs through d = 64", 30000, [&](Verdict &v) {
    for (int d = 3; d <= 6; ++d) {
      const Rat closed = pairing_closed(d);
      v.equal(closed, pairing_direct(d), "direct d=" + std::to_string(d));
      v.equal(closed, pairing_binomial(d), "binomial d=" + std::to_string(d));
    }
    v.equal(Rat(2), pairing_closed(3), "d=3");
    for (const auto &row : negativity_report(12))
      v.equal(row.d == 3 ? 1 : -1, row.sign, "sign d=" + std::to_string(row.d));
    for (int d = 4; d <= 64; ++d)
      v.require(pairing_closed(d).sign() < 0, "closed form at d=" + std::to_string(d));
  });

  all &= run_criterion(5, "gp pairing is the constant -16", 1000, [&](Verdict &v) {
    const Scalar t = pair(gp_profile(), glue_pullback(gp_class(), 3));
    v.equal(Scalar(-16), t, "T . pi^*GP");
    v.equal(0, t.degree(), "degree in a");
    v.equal(Rat(-16), poly_eval(t, Rat(5)), "a = 5");
  });

  all &= run_criterion(6, "Chow suite", 1000, [&](Verdict &v) {
    report_clean(verify_chow(opts), v);
  });

  all &= run_criterion(7, "certificates, refusal and lifts", 30000, [&](Verdict &v) {
    const auto trig = trigonal_certificate(), gp = gp_certificate();
    v.equal(Scalar(-1), trig.pairing, "trigonal");
    v.equal(Scalar(-16), gp.pairing, "gp");
    v.equal(Scalar(-1), lift(trig, trig.n + 2).pairing, "trigonal lift");
    v.equal(Scalar(-16), lift(gp, gp.n + 2).pairing, "gp lift");
    for (int d = 4; d <= 6; ++d) {
      const auto c = gonal_certificate(d);
      v.equal(Scalar(pairing_closed(d)), c.pairing, "gonal d=" + std::to_string(d));
      v.equal(c.pairing, lift(c, c.n + 2).pairing, "gonal lift d=" + std::to_string(d));
    }
    bool refused = false;
    try {
      certify("bn:3", bn_class(3), 4, "gonal:3", gonal_profile(3), standard_assertions());
    } catch (const CertificateRefused &e) {
      refused = e.pairing == Scalar(2);
    }
    v.require(refused, "d = 3 profile was not refused with pairing 2");
  });

  all &= run_criterion(8, "randomized property suites", 60000, [&](Verdict &v) {
    std::mt19937 rng(kSeed);
    for (int t = 0; t < kInstances && v.ok; ++t) {
      const int n = 4 + t % 6;
      const CurveProfile p(n, random_scalar(rng), random_terms(rng, n));
      const DivisorClassM1n x(n, random_scalar(rng), random_terms(rng, n)),
          y(n, random_scalar(rng), random_terms(rng, n));
      const Scalar a = random_scalar(rng), b = random_scalar(rng);
      v.equal(a * pair(p, x) + b * pair(p, y), pair(p, linear_combine({{a, x}, {b, y}})),
              "bilinearity");

      const int m = 2 + t % 5;
      const auto w1 = random_mg(rng, m + 1), w2 = random_mg(rng, m + 1);
      const auto pw1 = glue_pullback(w1, m), pw2 = glue_pullback(w2, m);
      v.require(glue_pullback(w1.scaled(a) + w2.scaled(b), m) ==
                    linear_combine({{a, pw1}, {b, pw2}}),
                "pullback linearity");
      v.require(permute_markings(pw1, random_pair_symmetry(rng, m)) == pw1,
                "pair symmetry of a random pullback");
      const auto trig = glue_pullback(bn_class(3), 4);
      v.require(permute_markings(trig, random_pair_symmetry(rng, 4)) == trig,
                "pair symmetry of the trigonal pullback");
      const auto gp = glue_pullback(gp_class(), 3);
      v.require(permute_markings(gp, random_pair_symmetry(rng, 3)) == gp,
                "pair symmetry of the gp pullback");

      chow::ChowDeg1 c[3];
      for (auto &ci : c)
        for (int k = 0; k < chow::kGens; ++k)
          ci[k] = random_scalar(rng);
      v.require(chow::triple(c[0], c[1], c[2]) == chow::triple(c[1], c[2], c[0]) &&
                    chow::triple(c[0], c[1], c[2]) == chow::triple(c[1], c[0], c[2]),
                "top-form symmetry");
    }
    for (int m = 1; m <= 12; ++m)
      for (int i = 0; i <= m; ++i)
        v.equal(binom(m, i), Rat(long(lambda_family(i, m).sets.size())),
                "|Lambda_" + std::to_string(i) + "| for m=" + std::to_string(m));
    for (int d = 3; d <= 3 + kInstances; ++d) {
      const auto bt = binomial_terms(d);
      v.equal(bt.even_sum_closed, bt.even_sum, "even sum d=" + std::to_string(d));
      v.equal(bt.odd_sum_closed, bt.odd_sum, "odd sum d=" + std::to_string(d));
    }
  });

  std::cout << (all ? "all criteria pass" : "some criteria FAILED") << "\n";
  return all ? 0 : 1;
}
