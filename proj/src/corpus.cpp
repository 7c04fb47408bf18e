#include "m1n/corpus.hpp"

#include <charconv>

#include "m1n/error.hpp"

namespace m1n {

namespace {

void check_gonality(int d) {
  if (d < 3)
    throw DomainError("d-gonal data needs d >= 3, got " + std::to_string(d));
}

// Literal subset lists, kept apart from the gluing helpers.
Mask literal(std::initializer_list<int> members) {
  Mask s = 0;
  for (int i : members)
    s |= Mask{1} << (i - 1);
  return s;
}

// A union of whole pairs {2k-1, 2k}: each odd marking present iff its
// partner is.
bool glued_pairs_only(Mask s, int n) {
  for (int k = 1; 2 * k <= n; ++k) {
    bool odd = s & literal({2 * k - 1});
    bool even = s & literal({2 * k});
    if (odd != even)
      return false;
  }
  return true;
}

} // namespace

Rat bn_constant(int d) {
  check_gonality(d);
  return Rat(3 * factorial(2 * d - 4), factorial(d) * factorial(d - 2));
}

DivisorClassMg bn_class(int d) {
  check_gonality(d);
  const int g = 2 * d - 1;
  const Rat c = bn_constant(d);
  std::vector<Scalar> delta;
  for (int i = 1; i <= d - 1; ++i)
    delta.emplace_back(-c * Rat(i * (2 * d - 1 - i)));
  return DivisorClassMg(g, c * Rat(2 * d + 2), -c * Rat(d) / Rat(3), std::move(delta));
}

DivisorClassMg bn_class_delta_form(int d) {
  check_gonality(d);
  const Rat c = bn_constant(d);
  const Rat third_d = Rat(d) / Rat(3);
  std::vector<Scalar> u;
  for (int i = 1; i <= d - 1; ++i)
    u.emplace_back(-c * (Rat(i * (2 * d - 1 - i)) - third_d));
  return DivisorClassMg::from_delta_form(2 * d - 1, c * Rat(2 * d + 2), -c * third_d, std::move(u));
}

DivisorClassMg gp_class() { return DivisorClassMg(4, 34, -4, {-14, -18}); }

DivisorClassMg gp_class_delta_form() {
  return DivisorClassMg::from_delta_form(4, 34, -4, {-10, -14});
}

DivisorClassM1n golden_pullback(Golden which) {
  std::vector<BoundaryTerm> terms;
  if (which == Golden::Trigonal) {
    // 4 lambda + sum_{S not a pair union} (|S|-1) delta_S + 4 delta_{1..8}
    //   - 2 sum_k delta_{2k-1,2k} - 2 sum_{i<j} delta_{2i-1,2i,2j-1,2j}
    const int n = 8;
    for (Mask s = 1; s < (Mask{1} << n); ++s)
      if (subset_size(s) >= 2 && !glued_pairs_only(s, n))
        terms.push_back({s, Scalar(subset_size(s) - 1)});
    terms.push_back({literal({1, 2, 3, 4, 5, 6, 7, 8}), 4});
    for (auto p : {literal({1, 2}), literal({3, 4}), literal({5, 6}), literal({7, 8})})
      terms.push_back({p, -2});
    for (auto q : {literal({1, 2, 3, 4}), literal({1, 2, 5, 6}), literal({1, 2, 7, 8}),
                   literal({3, 4, 5, 6}), literal({3, 4, 7, 8}), literal({5, 6, 7, 8})})
      terms.push_back({q, -2});
    return DivisorClassM1n(n, 4, std::move(terms));
  }
  // 10 lambda + 4 sum_{S not a pair union} (|S|-1) delta_S + 10 delta_{1..6}
  //   - 6 (pairs) - 2 (unions of two pairs)
  const int n = 6;
  for (Mask s = 1; s < (Mask{1} << n); ++s)
    if (subset_size(s) >= 2 && !glued_pairs_only(s, n))
      terms.push_back({s, Scalar(4 * (subset_size(s) - 1))});
  terms.push_back({literal({1, 2, 3, 4, 5, 6}), 10});
  for (auto p : {literal({1, 2}), literal({3, 4}), literal({5, 6})})
    terms.push_back({p, -6});
  for (auto q : {literal({1, 2, 3, 4}), literal({1, 2, 5, 6}), literal({3, 4, 5, 6})})
    terms.push_back({q, -2});
  return DivisorClassM1n(n, 10, std::move(terms));
}

std::string ProfileName::str() const {
  switch (kind) {
  case ProfileKind::Trig:
    return "trig";
  case ProfileKind::Bnd:
    return "bnd";
  case ProfileKind::Gonal:
    return "gonal:" + std::to_string(d);
  case ProfileKind::Gp:
    return "gp";
  }
  return "?";
}

ProfileName ProfileName::parse(std::string_view text) {
  if (text == "trig")
    return {ProfileKind::Trig};
  if (text == "bnd")
    return {ProfileKind::Bnd};
  if (text == "gp")
    return {ProfileKind::Gp};
  constexpr std::string_view prefix = "gonal:";
  if (text.starts_with(prefix)) {
    auto rest = text.substr(prefix.size());
    int d = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), d);
    if (ec == std::errc() && ptr == rest.data() + rest.size()) {
      check_gonality(d);
      return {ProfileKind::Gonal, d};
    }
  }
  throw DomainError("unknown profile '" + std::string(text) + "'");
}

CurveProfile trig_profile() {
  return CurveProfile(8, 1,
                      {{literal({1, 2}), 1},
                       {literal({3, 4}), 1},
                       {literal({5, 6}), 1},
                       {literal({7, 8}), 1},
                       {literal({2, 4, 6, 8}), 1}});
}

CurveProfile bnd_profile() {
  return CurveProfile(8, 1, {{literal({1, 2, 3, 4, 5, 6, 7}), -1}});
}

CurveProfile gonal_profile(int d) {
  check_gonality(d);
  const int pairs = 2 * d - 2;
  const int n = 2 * pairs;
  check_marking_count(n);
  check_enumerable(pairs);

  auto evens_of = [](Mask chosen) {
    Mask s = 0;
    for (; chosen; chosen &= chosen - 1)
      s |= Mask{1} << (2 * std::countr_zero(chosen) + 1);
    return s;
  };
  const Rat d1(d - 1), d2(d - 2);

  std::vector<BoundaryTerm> terms;
  for (int k = 1; k <= pairs; ++k)
    terms.push_back({literal({2 * k - 1, 2 * k}), Scalar(pow(d1, pairs))});
  for (Mask chosen = 1; chosen < (Mask{1} << pairs); ++chosen) {
    const int s = subset_size(chosen);
    const Mask even = evens_of(chosen);
    // Sections through the two extra base points.
    if (s >= 2)
      terms.push_back({even, Scalar(Rat(2) * pow(d2, pairs - s))});
    // Sections through p_{2k-1}, with p_{2k} excluded from S.
    for (int k = 1; k <= pairs; ++k)
      if (!(chosen & (Mask{1} << (k - 1))))
        terms.push_back({even | literal({2 * k - 1}), Scalar(d1 * pow(d2, pairs - 1 - s))});
  }
  return CurveProfile(n, 0, std::move(terms));
}

CurveProfile gp_profile() {
  const Scalar a = PolyRat::param();
  std::vector<BoundaryTerm> terms;
  for (int i : {1, 2})
    for (int j : {3, 4})
      for (int k : {5, 6})
        terms.push_back({literal({i, j, k}), a + Scalar(1)});
  for (int k = 1; k <= 3; ++k)
    terms.push_back({literal({2 * k - 1, 2 * k}), Scalar(8) * a});
  return CurveProfile(6, Scalar(8) * (a - Scalar(1)), std::move(terms));
}

CurveProfile profile(const ProfileName &name) {
  switch (name.kind) {
  case ProfileKind::Trig:
    return trig_profile();
  case ProfileKind::Bnd:
    return bnd_profile();
  case ProfileKind::Gonal:
    return gonal_profile(name.d);
  case ProfileKind::Gp:
    return gp_profile();
  }
  throw DomainError("unknown profile");
}

} // namespace m1n
