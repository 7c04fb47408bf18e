#include "m1n/report.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "m1n/certify.hpp"
#include "m1n/chow.hpp"
#include "m1n/corpus.hpp"
#include "m1n/error.hpp"
#include "m1n/gluing.hpp"
#include "m1n/gonal.hpp"

namespace m1n {

CheckResult expect_equal(std::string module, std::string check, const Scalar &expected,
                         const Scalar &actual, std::string citation) {
  return {std::move(module),        std::move(check),        expected == actual,
          scalar_to_json(expected), scalar_to_json(actual), std::move(citation)};
}

CheckResult expect_equal_poly(std::string module, std::string check, const Scalar &expected,
                              const Scalar &actual, std::string citation) {
  return {std::move(module),      std::move(check),      expected == actual,
          poly_to_json(expected), poly_to_json(actual), std::move(citation)};
}

CheckResult expect_true(std::string module, std::string check, bool ok, std::string citation,
                        nlohmann::json expected, nlohmann::json actual) {
  if (actual.is_null())
    actual = ok;
  return {std::move(module),   std::move(check),  ok,
          std::move(expected), std::move(actual), std::move(citation)};
}

bool all_pass(const std::vector<CheckResult> &results) {
  return std::all_of(results.begin(), results.end(), [](const auto &r) { return r.pass; });
}

std::string emit_report(std::vector<CheckResult> results, ReportFormat format) {
  std::stable_sort(results.begin(), results.end(), [](const auto &a, const auto &b) {
    return std::tie(a.module, a.check) < std::tie(b.module, b.check);
  });
  const std::size_t passed =
      std::count_if(results.begin(), results.end(), [](const auto &r) { return r.pass; });
  const std::size_t failed = results.size() - passed;

  if (format == ReportFormat::Json) {
    auto rows = nlohmann::json::array();
    for (const auto &r : results)
      rows.push_back({{"module", r.module},
                    {"check", r.check},
                      {"status", r.pass ? "pass" : "fail"},
                      {"expected", r.expected},
                      {"actual", r.actual},
                      {"citation", r.citation}});
    nlohmann::json doc = {{"checks", results.size()},
                          {"passed", passed},
                          {"failed", failed},
                          {"results", std::move(rows)}};
    return doc.dump(2) + "\n";
  }

  std::ostringstream os;
  for (const auto &r : results)
    os << (r.pass ? "PASS " : "FAIL ") << r.module << "/" << r.check
       << "  expected=" << r.expected.dump() << " actual=" << r.actual.dump() << "  ["
       << r.citation << "]\n";
  os << results.size() << " checks, " << passed << " passed, " << failed << " failed\n";
  return os.str();
}

namespace {

std::string subset_label(Mask s) {
  std::string out = "delta_0;{";
  bool first = true;
  for (int i : members_of(s)) {
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

} // namespace

std::vector<CheckResult> compare_classes(const std::string &module, const std::string &check,
                                         const DivisorClassM1n &expected,
                                         const DivisorClassM1n &actual,
                                         const std::string &citation, std::size_t limit) {
  std::vector<CheckResult> rows;
  if (expected.n() != actual.n()) {
    rows.push_back(expect_true(module, check + ".space", false, citation, expected.n(), actual.n()));
    return rows;
  }
  const int n = expected.n();
  check_enumerable(n);
  std::size_t compared = 1, mismatched = 0;
  auto record = [&](const std::string &label, const Scalar &e, const Scalar &a) {
    if (e == a)
      return;
    if (mismatched++ < limit)
      rows.push_back(expect_equal(module, check + "[" + label + "]", e, a, citation));
  };
  record("lambda", expected.lambda(), actual.lambda());
  for (Mask s = 1; s <= full_mask(n); ++s) {
    if (subset_size(s) < 2)
      continue;
    ++compared;
    record(subset_label(s), expected.coeff(s), actual.coeff(s));
  }
  // Keys outside the enumerated range cannot occur in validated classes.
  const std::size_t basis = (std::size_t{1} << n) - n;
  rows.push_back(expect_equal(module, check + ".coordinates_compared", Scalar(long(basis)),
                              Scalar(long(compared)), citation));
  rows.push_back(expect_equal(module, check + ".mismatched_coordinates", Scalar(0),
                              Scalar(long(mismatched)), citation));
  return rows;
}

namespace {

void append(std::vector<CheckResult> &out, std::vector<CheckResult> more) {
  for (auto &r : more)
    out.push_back(std::move(r));
}

// All permutations generated by pair swaps and adjacent pair transpositions.
std::vector<Permutation> pair_group_generators(int m) {
  std::vector<Permutation> gens;
  for (int k = 1; k <= m; ++k)
    gens.push_back(pair_swap(m, k));
  for (int k = 1; k < m; ++k) {
    std::vector<int> blocks(m);
    for (int j = 1; j <= m; ++j)
      blocks[j - 1] = j;
    std::swap(blocks[k - 1], blocks[k]);
    gens.push_back(pair_block_permutation(blocks));
  }
  return gens;
}

bool pair_symmetric(const DivisorClassM1n &cls, int m) {
  for (const auto &g : pair_group_generators(m))
    if (permute_markings(cls, g) != cls)
      return false;
  return true;
}

CheckResult certificate_row(const std::string &module, const std::string &check,
                            const Scalar &expected, const std::function<Certificate()> &make,
                            const std::string &citation) {
  try {
    Certificate c = make();
    return expect_equal(module, check, expected, c.pairing, citation);
  } catch (const CertificateRefused &e) {
    return {module, check, false, scalar_to_json(expected),
            "refused: " + std::string(e.what()), citation};
  }
}

} // namespace

std::vector<CheckResult> verify_trigonal(const VerifyOptions &opts) {
  const std::string mod = "trigonal";
  std::vector<CheckResult> out;
  const DivisorClassM1n pulled = glue_pullback(bn_class(3), 4);
  const DivisorClassM1n golden =
      opts.golden_trigonal ? *opts.golden_trigonal : golden_pullback(Golden::Trigonal);

  append(out, compare_classes(mod, "pullback_golden", golden, pulled,
                              "trigonal pullback expansion vs gluing formula"));
  out.push_back(expect_true(mod, "pullback_delta_form_consistency",
                            glue_pullback(bn_class_delta_form(3), 4) == pulled,
                            "8L - d - 3d1 - 5d2 equals 8L - d_irr - 4d1 - 6d2"));
  out.push_back(expect_equal(mod, "pullback_zero_on_complement_of_pair",
                             Scalar(0), pulled.coeff(mask_of(8, {3, 4, 5, 6, 7, 8})),
                             "Lambda_3 sets receive no coefficient"));
  out.push_back(expect_true(mod, "pullback_pair_symmetric", pair_symmetric(pulled, 4),
                            "symmetry between the four glued pairs"));
  out.push_back(expect_equal(mod, "B.pullback_BN13", Scalar(-1), pair(trig_profile(), pulled),
                             "cubic pencil through concurrent-line configuration"));
  out.push_back(expect_equal(mod, "C.pullback_BN13", Scalar(-2), pair(bnd_profile(), pulled),
                             "boundary pencil in delta_0;{1..7}"));
  out.push_back(certificate_row(mod, "certificate", Scalar(-1), trigonal_certificate,
                                "arithmetic premise of the extremality criterion"));
  out.push_back(certificate_row(
      mod, "certificate_lift_10", Scalar(-1),
      [] { return lift(trigonal_certificate(), 10); }, "projection formula for the forgetful map"));
  return out;
}

std::vector<CheckResult> verify_gonal(const VerifyOptions &opts) {
  const std::string mod = "gonal";
  std::vector<CheckResult> out;
  if (opts.max_d < 3)
    throw DomainError("--max-d must be at least 3");

  out.push_back(expect_equal(mod, "d=3.closed", Scalar(2), Scalar(pairing_closed(3)),
                             "degree-16 base change of the trigonal pencil"));
  for (const auto &row : negativity_report(opts.max_d)) {
    const std::string tag = "d=" + std::string(row.d < 10 ? "0" : "") + std::to_string(row.d);
    const int want = row.d == 3 ? 1 : -1;
    out.push_back(expect_true(mod, tag + ".sign", row.sign == want, "sign of B.pi^*BN^1_d",
                              want, row.sign));
    const BinomialTerms t = binomial_terms(row.d);
    out.push_back(expect_equal(mod, tag + ".even_sum_identity", Scalar(t.even_sum_closed),
                               Scalar(t.even_sum), "binomial identity for even subsets"));
    out.push_back(expect_equal(mod, tag + ".odd_sum_identity", Scalar(t.odd_sum_closed),
                               Scalar(t.odd_sum), "binomial identity for augmented subsets"));
    out.push_back(expect_equal(mod, tag + ".binomial_vs_closed", Scalar(row.value),
                               Scalar(pairing_binomial(row.d)), "binomial-sum route"));
    if (row.d <= opts.direct_max_d)
      out.push_back(expect_equal(mod, tag + ".direct_vs_closed", Scalar(row.value),
                                 Scalar(pairing_direct(row.d, opts.direct_max_d)),
                                 "full enumeration over the gluing pullback"));
  }
  bool negative = true;
  for (int d = 4; d <= 64; ++d)
    negative = negative && pairing_closed(d).sign() < 0;
  out.push_back(expect_true(mod, "closed_negative_4_to_64", negative,
                            "negativity for d >= 4, closed form"));

  out.push_back([&] {
    try {
      certify("bn:3", bn_class(3), 4, "gonal:3", gonal_profile(3), standard_assertions());
      return expect_true(mod, "certificate_refused_d=3", false, "positive pairing at d = 3",
                         "refused", "issued");
    } catch (const CertificateRefused &e) {
      return expect_equal(mod, "certificate_refused_d=3", Scalar(2), e.pairing,
                          "positive pairing at d = 3");
    }
  }());
  for (int d = 4; d <= std::min(opts.direct_max_d, opts.max_d); ++d) {
    const Scalar want(pairing_closed(d));
    out.push_back(certificate_row(mod, "certificate_d=" + std::to_string(d), want,
                                  [d] { return gonal_certificate(d); },
                                  "arithmetic premise of the extremality criterion"));
    out.push_back(certificate_row(
        mod, "certificate_d=" + std::to_string(d) + ".lift", want,
        [d] {
          const Certificate c = gonal_certificate(d);
          return lift(c, c.n + 2);
        },
        "projection formula for the forgetful map"));
  }
  return out;
}

std::vector<CheckResult> verify_gp(const VerifyOptions &opts) {
  const std::string mod = "gp";
  std::vector<CheckResult> out;
  const DivisorClassM1n pulled = glue_pullback(gp_class(), 3);
  const DivisorClassM1n golden = opts.golden_gp ? *opts.golden_gp : golden_pullback(Golden::Gp);

  append(out, compare_classes(mod, "pullback_golden", golden, pulled,
                              "Gieseker-Petri pullback expansion vs gluing formula"));
  out.push_back(expect_true(mod, "pullback_delta_form_consistency",
                            glue_pullback(gp_class_delta_form(), 3) == pulled,
                            "34L - 4d - 10d1 - 14d2 equals 34L - 4d_irr - 14d1 - 18d2"));
  out.push_back(expect_equal(mod, "pullback_lambda", Scalar(10), pulled.lambda(),
                             "Gieseker-Petri pullback expansion"));
  out.push_back(expect_true(mod, "pullback_pair_symmetric", pair_symmetric(pulled, 3),
                            "symmetry between the three glued pairs"));
  const Scalar t = pair(gp_profile(), pulled);
  out.push_back(expect_equal(mod, "T.pullback_GP", Scalar(-16), t,
                             "3-nodal family on the varying F_2"));
  out.push_back(expect_equal(mod, "T.pullback_GP_at_a=5", Scalar(-16),
                             Scalar(poly_eval(t, Rat(5))), "specialization a = 5"));
  out.push_back(certificate_row(mod, "certificate", Scalar(-16), gp_certificate,
                                "arithmetic premise of the extremality criterion"));
  out.push_back(certificate_row(
      mod, "certificate_lift_8", Scalar(-16), [] { return lift(gp_certificate(), 8); },
      "projection formula for the forgetful map"));
  return out;
}

std::vector<CheckResult> verify_chow(const VerifyOptions &) {
  using namespace chow;
  const std::string mod = "chow";
  std::vector<CheckResult> out;
  const Scalar a = PolyRat::param();

  for (const auto &e : lemma_table_check())
    out.push_back(expect_equal(mod, "table." + e.name, Scalar(e.expected), e.actual,
                               "intersection table of X"));

  const ChowDeg1 f1 = ChowDeg1::gen(F1);
  for (int i = 1; i <= 3; ++i) {
    const std::string ei = "E" + std::to_string(i);
    out.push_back(expect_true(mod, "restriction." + ei + "." + ei,
                              restrict_to_exceptional(ChowDeg1::gen(Gen(E1 + i - 1)), i) ==
                                  F1Class{Scalar(-1), Scalar(1)},
                              "E_i.E_i = r_i - l_i"));
    out.push_back(expect_true(mod, "restriction.Pi." + ei,
                              restrict_to_exceptional(pi(), i) == F1Class{Scalar(0), Scalar(1)} &&
                                  restrict_to_exceptional(f1, i) == F1Class{Scalar(0), Scalar(1)},
                              "Pi.E_i = f1.E_i = r_i"));
  }
  out.push_back(expect_true(mod, "restriction.D.E1",
                            restrict_to_exceptional(family_divisor(), 1) ==
                                F1Class{Scalar(2), a - Scalar(1)},
                            "D|E_i = 2l + (a-1)r"));

  bool symmetric = true;
  const TopForm &t = top_form();
  for (int i = 0; i < kGens; ++i)
    for (int j = 0; j < kGens; ++j)
      for (int k = 0; k < kGens; ++k)
        symmetric = symmetric && t(i, j, k) == t(j, i, k) && t(i, j, k) == t(i, k, j) &&
                    t(i, j, k) == t(k, j, i);
  out.push_back(expect_true(mod, "top_form_symmetric", symmetric, "symmetric trilinear form"));

  const ChernData cd = chern_data();
  out.push_back(expect_equal(mod, "hrr.c1c2_Y", Scalar(24),
                             intersect(cd.c2_ty, Scalar(-1) * cd.k_y), "chi(O_Y) = 1"));
  out.push_back(expect_equal(mod, "hrr.c1c2_X", Scalar(24),
                             intersect(cd.c2_tx, Scalar(-1) * cd.k_x), "chi(O_X) = 1"));

  out.push_back(expect_equal(mod, "hrr.c1c2_Y_extra_base_term", Scalar(32),
                             intersect(c2_ty_with_extra_base_term(), Scalar(-1) * cd.k_y),
                             "reading with an extra base term; fails chi(O_Y) = 1"));

  const FamilyInvariants inv = family_invariants();
  out.push_back(expect_equal_poly(mod, "c2_TD", {Rat(-11), Rat(13)}, inv.c2_td,
                                  "c2(T_D) from the normal bundle sequence"));
  out.push_back(expect_equal_poly(mod, "kd_squared", -(a + Scalar(1)), inv.kd_squared,
                                  "each rational tail contributes -1 to K_D^2"));
  out.push_back(expect_equal_poly(mod, "twelve_lambda", Scalar(12) * a - Scalar(12),
                                  inv.kd_squared + inv.c2_td, "Noether formula"));
  out.push_back(expect_equal_poly(mod, "hodge_lambda", a - Scalar(1), inv.hodge_lambda,
                                  "lambda = chi(O_D)"));
  out.push_back(expect_equal_poly(mod, "hodge_lambda_two_routes", inv.hodge_lambda,
                                  inv.hodge_lambda_rr, "Riemann-Roch on X vs Noether on D"));
  out.push_back(expect_equal_poly(mod, "rational_tails", a + Scalar(1), inv.rational_tails,
                                  "D . Pi' restricted to fibers"));
  out.push_back(expect_equal_poly(mod, "two_section_genus", a - Scalar(1),
                                  inv.two_section_genus, "adjunction on F_1"));
  out.push_back(expect_equal_poly(mod, "ramification", Scalar(2) * a, inv.ramification,
                                  "Riemann-Hurwitz for the 2-sections"));
  out.push_back(expect_equal_poly(mod, "directrix_cycles", a - Scalar(2), inv.directrix_cycles,
                                  "fibers containing the directrix"));
  out.push_back(expect_equal_poly(mod, "irreducible_nodal", Scalar(10) * a - Scalar(8),
                                  inv.irreducible_nodal, "12 lambda minus two-node cycles"));
  out.push_back(expect_equal_poly(mod, "euler_census", inv.c2_td,
                                  inv.irreducible_nodal + inv.rational_tails +
                                      Scalar(2) * inv.directrix_cycles,
                                  "Euler number of singular fibers"));
  return out;
}

std::vector<CheckResult> verify_section(const std::string &section, const VerifyOptions &opts) {
  if (section == "trigonal")
    return verify_trigonal(opts);
  if (section == "gonal")
    return verify_gonal(opts);
  if (section == "gp")
    return verify_gp(opts);
  if (section == "chow")
    return verify_chow(opts);
  if (section == "all") {
    std::vector<CheckResult> out;
    for (const char *s : {"trigonal", "gonal", "gp", "chow"})
      append(out, verify_section(s, opts));
    return out;
  }
  throw DomainError("unknown verify section '" + section + "'");
}

} // namespace m1n
