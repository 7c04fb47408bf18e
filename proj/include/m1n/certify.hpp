#pragma once

// Extremality certificates: a declared moving curve whose pairing with the
// pulled-back class is a negative constant. The geometric premises are
// recorded as declarations; only the arithmetic is checked here.

#include <string>
#include <vector>

#include <json.hpp>

#include "m1n/error.hpp"
#include "m1n/picard.hpp"

namespace m1n {

enum class Assertion {
  MovingInMainComponent,  // the profile's curve sweeps out the main component
  NotContainedInBoundary, // the curve meets the interior of M_{1,n}
  MainComponentIrreducible,
};

std::string to_string(Assertion a);

inline constexpr const char *kInferenceRule = "ChenCoskun Lemma 4.1";

// Refused because the pairing is non-negative or depends on a.
struct CertificateRefused : Error {
  CertificateRefused(const std::string &what, Scalar pairing)
      : Error(what), pairing(std::move(pairing)) {}
  Scalar pairing;
};

struct IncompletePremise : Error {
  using Error::Error;
};

struct Certificate {
  std::string divisor_name;
  DivisorClassMg source;       // class on M-bar_{m+1}
  int m;                       // glued pairs
  int n;                       // markings; n > 2m after a lift
  std::string profile_name;
  CurveProfile profile;        // on n markings
  DivisorClassM1n pulled_back; // f^* pi^* source on n markings
  Scalar pairing;
  std::vector<Assertion> assertions;
  std::string conclusion;
};

Certificate certify(const std::string &divisor_name, const DivisorClassMg &divisor, int m,
                    const std::string &profile_name, const CurveProfile &profile,
                    const std::vector<Assertion> &assertions);

// Pull the certificate back to n markings along the forgetful map.
Certificate lift(const Certificate &cert, int n);

// The pulled-back class is omitted from the JSON; it is determined by the
// source class, m and n.
nlohmann::json to_json(const Certificate &cert);

std::vector<Assertion> standard_assertions();

// The three certificates carried by the corpus.
Certificate trigonal_certificate();
Certificate gp_certificate();
Certificate gonal_certificate(int d);

} // namespace m1n
