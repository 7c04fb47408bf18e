#include "m1n/certify.hpp"

#include <algorithm>

#include "m1n/corpus.hpp"
#include "m1n/gluing.hpp"

namespace m1n {

std::string to_string(Assertion a) {
  switch (a) {
  case Assertion::MovingInMainComponent:
    return "profile-is-moving-in-main-component";
  case Assertion::NotContainedInBoundary:
    return "profile-not-contained-in-boundary";
  case Assertion::MainComponentIrreducible:
    return "main-component-irreducible";
  }
  return "?";
}

std::vector<Assertion> standard_assertions() {
  return {Assertion::MovingInMainComponent, Assertion::NotContainedInBoundary};
}

namespace {

std::string conclusion_text(const Scalar &pairing, int n) {
  return "B . pi^*W = " + pairing.pretty() +
         " < 0 on M-bar_{1," + std::to_string(n) +
         "}; since B is not contained in the boundary, B . (boundary part) >= 0, so B meets the "
         "main component negatively while moving in it: the main component is extremal and rigid "
         "by " + kInferenceRule + ".";
}

} // namespace

Certificate certify(const std::string &divisor_name, const DivisorClassMg &divisor, int m,
                    const std::string &profile_name, const CurveProfile &profile,
                    const std::vector<Assertion> &assertions) {
  for (Assertion required : standard_assertions())
    if (std::find(assertions.begin(), assertions.end(), required) == assertions.end())
      throw IncompletePremise("missing declared premise '" + to_string(required) + "'");
  if (profile.n() != 2 * m)
    throw SpaceMismatchError("profile lives on " + std::to_string(profile.n()) +
                             " markings, gluing " + std::to_string(m) + " pairs needs " +
                             std::to_string(2 * m));

  DivisorClassM1n pulled = glue_pullback(divisor, m);
  Scalar p = pair(profile, pulled);
  if (!p.is_constant())
    throw CertificateRefused("pairing " + p.pretty() + " has degree " +
                                 std::to_string(p.degree()) + " in a",
                             p);
  if (p.constant_value().sign() >= 0)
    throw CertificateRefused("pairing " + p.pretty() + " is not negative", p);

  std::vector<Assertion> declared = assertions;
  std::sort(declared.begin(), declared.end());
  declared.erase(std::unique(declared.begin(), declared.end()), declared.end());

  return Certificate{divisor_name,      divisor, m,  2 * m, profile_name, profile,
                     std::move(pulled), p,       declared, conclusion_text(p, 2 * m)};
}

Certificate lift(const Certificate &cert, int n) {
  if (n < cert.n)
    throw DomainError("cannot lift a certificate on " + std::to_string(cert.n) + " markings to " +
                      std::to_string(n));
  if (n == cert.n)
    return cert;
  Certificate out = cert;
  out.n = n;
  out.pulled_back = forget_pullback(cert.pulled_back, n);
  out.profile = canonical_lift(cert.profile, n);
  out.pairing = pair(out.profile, out.pulled_back);
  if (out.pairing != cert.pairing)
    throw Error("lifted pairing " + out.pairing.pretty() + " differs from " + cert.pairing.pretty());
  out.conclusion = conclusion_text(out.pairing, n);
  return out;
}

nlohmann::json to_json(const Certificate &cert) {
  auto assertions = nlohmann::json::array();
  for (Assertion a : cert.assertions)
    assertions.push_back({{"claim", to_string(a)}, {"status", "declared, not machine-checked"}});
  return {{"divisor", {{"name", cert.divisor_name}, {"class", to_json(cert.source)}}},
          {"m", cert.m},
          {"space", {{"type", "M1n"}, {"n", cert.n}}},
          {"profile", {{"name", cert.profile_name}, {"data", to_json(cert.profile)}}},
          {"pairing", scalar_to_json(cert.pairing)},
          {"assertions", std::move(assertions)},
          {"inference", kInferenceRule},
          {"conclusion", cert.conclusion}};
}

Certificate trigonal_certificate() {
  return certify("bn:3", bn_class(3), 4, "trig", trig_profile(), standard_assertions());
}

Certificate gp_certificate() {
  return certify("gp", gp_class(), 3, "gp", gp_profile(), standard_assertions());
}

Certificate gonal_certificate(int d) {
  auto assertions = standard_assertions();
  assertions.push_back(Assertion::MainComponentIrreducible);
  return certify("bn:" + std::to_string(d), bn_class(d), 2 * d - 2, "gonal:" + std::to_string(d),
                 gonal_profile(d), assertions);
}

} // namespace m1n
