#pragma once

// Named divisor classes, golden pullback expansions and test-curve
// intersection profiles.

#include <string>
#include <string_view>

#include "m1n/picard.hpp"

namespace m1n {

// c = 3 (2d-4)! / (d! (d-2)!), the normalizing constant of the d-gonal class.
Rat bn_constant(int d);

// The d-gonal Brill-Noether class on M-bar_{2d-1}, d >= 3.
DivisorClassMg bn_class(int d);
// Same class assembled from its delta-form.
DivisorClassMg bn_class_delta_form(int d);

// The Gieseker-Petri class on M-bar_4.
DivisorClassMg gp_class();
DivisorClassMg gp_class_delta_form();

enum class Golden { Trigonal, Gp };

// Hand-entered pullback expansions on 8 (trigonal) and 6 (gp) markings.
// Built term by term from the displayed formula, independently of the
// gluing code.
DivisorClassM1n golden_pullback(Golden which);

enum class ProfileKind { Trig, Bnd, Gonal, Gp };

struct ProfileName {
  ProfileKind kind;
  int d = 0; // only for Gonal

  std::string str() const;
  // "trig", "bnd", "gonal:<d>" or "gp"; DomainError otherwise.
  static ProfileName parse(std::string_view text);
};

// Pencil of plane cubics through eight points on four concurrent lines.
CurveProfile trig_profile();
// Cubic pencil attached to a rational tail carrying markings 1..7.
CurveProfile bnd_profile();
// d-gonal pencil on E x P^1, after the degree (d-1)^{2d-2} base change.
CurveProfile gonal_profile(int d);
// Family of 3-nodal curves on the varying F_2, after the degree 8 base
// change; values are polynomials in a.
CurveProfile gp_profile();

CurveProfile profile(const ProfileName &name);

} // namespace m1n
