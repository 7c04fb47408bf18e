#include "m1n/picard.hpp"

#include <algorithm>
#include <string>

#include "m1n/error.hpp"

namespace m1n {

namespace {

void validate_subset(int n, Mask s) {
  if (s & ~full_mask(n))
    throw MarkingIndexError("subset mentions a marking above n = " + std::to_string(n));
  if (subset_size(s) < 2)
    throw DomainError("boundary index needs at least two markings");
}

void require_same_space(int n1, int n2) {
  if (n1 != n2)
    throw SpaceMismatchError("M-bar_{1," + std::to_string(n1) + "} vs M-bar_{1," +
                             std::to_string(n2) + "}");
}

BoundaryMap scaled(const BoundaryMap &map, const Scalar &s) {
  BoundaryMap out;
  out.reserve(map.size());
  bool unit = s == Scalar(1);
  for (const auto &t : map) {
    Scalar c = unit ? t.coeff : t.coeff * s;
    if (!c.is_zero())
      out.push_back({t.subset, std::move(c)});
  }
  return out;
}

// acc + s * rhs, both sorted.
BoundaryMap merge_add(BoundaryMap acc, const BoundaryMap &rhs, const Scalar &s) {
  BoundaryMap out;
  out.reserve(acc.size() + rhs.size());
  std::size_t i = 0, j = 0;
  while (i < acc.size() || j < rhs.size()) {
    if (j == rhs.size() || (i < acc.size() && acc[i].subset < rhs[j].subset)) {
      out.push_back(std::move(acc[i++]));
    } else if (i == acc.size() || rhs[j].subset < acc[i].subset) {
      Scalar c = rhs[j].coeff * s;
      if (!c.is_zero())
        out.push_back({rhs[j].subset, std::move(c)});
      ++j;
    } else {
      Scalar c = std::move(acc[i].coeff);
      c += rhs[j].coeff * s;
      if (!c.is_zero())
        out.push_back({acc[i].subset, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

std::string at(const std::string &path) { return " at " + (path.empty() ? "/" : path); }

const nlohmann::json &field(const nlohmann::json &j, const char *key, const std::string &path) {
  if (!j.is_object() || !j.contains(key))
    throw ParseError("missing field '" + std::string(key) + "'" + at(path));
  return j.at(key);
}

Scalar scalar_field(const nlohmann::json &j, const char *key, const std::string &path) {
  try {
    return scalar_from_json(field(j, key, path));
  } catch (const ParseError &e) {
    throw ParseError(std::string(e.what()) + at(path + "/" + key));
  }
}

int int_field(const nlohmann::json &j, const char *key, const std::string &path) {
  const auto &v = field(j, key, path);
  if (!v.is_number_integer())
    throw ParseError("expected integer" + at(path + "/" + key));
  return v.get<int>();
}

std::vector<BoundaryTerm> boundary_from_json(const nlohmann::json &arr, int n,
                                             const std::string &path) {
  if (!arr.is_array())
    throw ParseError("expected array" + at(path));
  std::vector<BoundaryTerm> terms;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    std::string p = path + "/" + std::to_string(k);
    const auto &members = field(arr[k], "S", p);
    if (!members.is_array())
      throw ParseError("expected integer list" + at(p + "/S"));
    std::vector<int> ids;
    for (const auto &m : members) {
      if (!m.is_number_integer())
        throw ParseError("expected integer list" + at(p + "/S"));
      ids.push_back(m.get<int>());
    }
    Mask s;
    try {
      s = mask_of(n, ids);
    } catch (const Error &e) {
      throw ParseError(std::string(e.what()) + at(p + "/S"));
    }
    if (subset_size(s) != static_cast<int>(ids.size()))
      throw ParseError("repeated marking" + at(p + "/S"));
    if (subset_size(s) < 2)
      throw ParseError("boundary index needs at least two markings" + at(p + "/S"));
    terms.push_back({s, scalar_field(arr[k], "coeff", p)});
  }
  return terms;
}

nlohmann::json boundary_to_json(const BoundaryMap &map) {
  auto arr = nlohmann::json::array();
  for (const auto &t : map)
    arr.push_back({{"S", members_of(t.subset)}, {"coeff", scalar_to_json(t.coeff)}});
  return arr;
}

int m1n_space(const nlohmann::json &j) {
  const auto &space = field(j, "space", "");
  const auto &type = field(space, "type", "/space");
  if (type != "M1n")
    throw ParseError("expected space type \"M1n\"" + at("/space/type"));
  int n = int_field(space, "n", "/space");
  try {
    check_marking_count(n);
  } catch (const Error &e) {
    throw ParseError(std::string(e.what()) + at("/space/n"));
  }
  return n;
}

} // namespace

void check_marking_count(int n) {
  if (n < 1 || n > kMaxMarkings)
    throw DomainError("marking count must lie in [1, 64], got " + std::to_string(n));
}

void check_enumerable(int n) {
  if (n > kMaxEnumeratedMarkings)
    throw ResourceGuardError("enumerating all subsets of " + std::to_string(n) +
                             " markings exceeds the cap of " +
                             std::to_string(kMaxEnumeratedMarkings));
}

Mask mask_of(int n, std::span<const int> members) {
  check_marking_count(n);
  Mask s = 0;
  for (int i : members) {
    if (i < 1 || i > n)
      throw MarkingIndexError("marking " + std::to_string(i) + " outside 1.." +
                              std::to_string(n));
    s |= bit_of(i);
  }
  return s;
}

Mask mask_of(int n, std::initializer_list<int> members) {
  return mask_of(n, std::span<const int>(members.begin(), members.size()));
}

std::vector<int> members_of(Mask s) {
  std::vector<int> out;
  out.reserve(subset_size(s));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

MarkedSubset::MarkedSubset(int n, Mask members) : n_(n), mask_(members) {
  check_marking_count(n);
  if (members & ~full_mask(n))
    throw MarkingIndexError("subset mentions a marking above n = " + std::to_string(n));
}

MarkedSubset MarkedSubset::of(int n, std::initializer_list<int> members) {
  return {n, mask_of(n, members)};
}

BoundaryMap canonical_boundary(int n, std::vector<BoundaryTerm> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto &a, const auto &b) { return a.subset < b.subset; });
  BoundaryMap out;
  out.reserve(terms.size());
  for (auto &t : terms) {
    validate_subset(n, t.subset);
    if (!out.empty() && out.back().subset == t.subset)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const auto &t) { return t.coeff.is_zero(); });
  return out;
}

BoundaryMap canonical_sorted_boundary(int n, std::vector<BoundaryTerm> terms) {
  for (std::size_t k = 0; k < terms.size(); ++k) {
    validate_subset(n, terms[k].subset);
    if (k > 0 && terms[k - 1].subset >= terms[k].subset)
      throw DomainError("boundary terms not strictly sorted");
  }
  std::erase_if(terms, [](const auto &t) { return t.coeff.is_zero(); });
  return terms;
}

const Scalar *find_coeff(const BoundaryMap &map, Mask subset) {
  auto it = std::lower_bound(map.begin(), map.end(), subset,
                             [](const BoundaryTerm &t, Mask s) { return t.subset < s; });
  if (it == map.end() || it->subset != subset)
    return nullptr;
  return &it->coeff;
}

DivisorClassM1n::DivisorClassM1n(int n) : n_(n) { check_marking_count(n); }

DivisorClassM1n::DivisorClassM1n(int n, Scalar lambda, std::vector<BoundaryTerm> boundary)
    : n_(n), lambda_(std::move(lambda)) {
  check_marking_count(n);
  boundary_ = canonical_boundary(n, std::move(boundary));
}

DivisorClassM1n::DivisorClassM1n(Trusted, int n, Scalar lambda, BoundaryMap boundary)
    : n_(n), lambda_(std::move(lambda)), boundary_(std::move(boundary)) {}

DivisorClassM1n make_trusted_class(int n, Scalar lambda, BoundaryMap boundary) {
  return DivisorClassM1n(DivisorClassM1n::Trusted{}, n, std::move(lambda), std::move(boundary));
}

DivisorClassM1n DivisorClassM1n::lambda_class(int n) { return DivisorClassM1n(n, Scalar(1), {}); }

DivisorClassM1n DivisorClassM1n::boundary_divisor(int n, Mask subset) {
  return DivisorClassM1n(n, Scalar(), {{subset, Scalar(1)}});
}

Scalar DivisorClassM1n::coeff(Mask subset) const {
  const Scalar *c = find_coeff(boundary_, subset);
  return c ? *c : Scalar();
}

DivisorClassM1n DivisorClassM1n::normalized() const {
  return DivisorClassM1n(n_, lambda_, boundary_);
}

CurveProfile::CurveProfile(int n) : n_(n) { check_marking_count(n); }

CurveProfile::CurveProfile(int n, Scalar on_lambda, std::vector<BoundaryTerm> on_boundary)
    : n_(n), on_lambda_(std::move(on_lambda)) {
  check_marking_count(n);
  on_boundary_ = canonical_boundary(n, std::move(on_boundary));
}

Scalar CurveProfile::value(Mask subset) const {
  const Scalar *c = find_coeff(on_boundary_, subset);
  return c ? *c : Scalar();
}

DivisorClassMg::DivisorClassMg(int g, Scalar lambda, Scalar delta_irr, std::vector<Scalar> delta)
    : g_(g), lambda_(std::move(lambda)), delta_irr_(std::move(delta_irr)), delta_(std::move(delta)) {
  if (g < 3)
    throw DomainError("M-bar_g classes need g >= 3, got " + std::to_string(g));
  if (static_cast<int>(delta_.size()) != g / 2)
    throw DomainError("M-bar_" + std::to_string(g) + " needs " + std::to_string(g / 2) +
                      " separating coefficients, got " + std::to_string(delta_.size()));
}

DivisorClassMg DivisorClassMg::from_delta_form(int g, Scalar lambda, Scalar delta_total,
                                               std::vector<Scalar> delta) {
  // t * (delta_irr + sum delta_i) + sum u_i delta_i
  for (auto &d : delta)
    d += delta_total;
  return DivisorClassMg(g, std::move(lambda), std::move(delta_total), std::move(delta));
}

const Scalar &DivisorClassMg::delta(int i) const {
  if (i < 1 || i > static_cast<int>(delta_.size()))
    throw DomainError("delta_" + std::to_string(i) + " does not exist on M-bar_" +
                      std::to_string(g_));
  return delta_[i - 1];
}

std::vector<Scalar> DivisorClassMg::delta_form_separating() const {
  std::vector<Scalar> out = delta_;
  for (auto &d : out)
    d -= delta_irr_;
  return out;
}

DivisorClassMg DivisorClassMg::scaled(const Scalar &s) const {
  std::vector<Scalar> d = delta_;
  for (auto &x : d)
    x *= s;
  return DivisorClassMg(g_, lambda_ * s, delta_irr_ * s, std::move(d));
}

DivisorClassMg operator+(const DivisorClassMg &a, const DivisorClassMg &b) {
  if (a.g_ != b.g_)
    throw SpaceMismatchError("M-bar_" + std::to_string(a.g_) + " vs M-bar_" + std::to_string(b.g_));
  std::vector<Scalar> d = a.delta_;
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] += b.delta_[i];
  return DivisorClassMg(a.g_, a.lambda_ + b.lambda_, a.delta_irr_ + b.delta_irr_, std::move(d));
}

DivisorClassM1n expand_symbol(const Symbol &symbol, int n) {
  check_marking_count(n);
  switch (symbol.kind) {
  case SymbolKind::DeltaIrr:
    return DivisorClassM1n(n, Scalar(12), {});
  case SymbolKind::Psi: {
    check_enumerable(n);
    if (symbol.index < 1 || symbol.index > n)
      throw MarkingIndexError("psi_" + std::to_string(symbol.index) + " on " + std::to_string(n) +
                              " markings");
    BoundaryMap terms;
    const Mask pt = bit_of(symbol.index);
    for (Mask s = 1; s <= full_mask(n); ++s)
      if ((s & pt) && subset_size(s) >= 2)
        terms.push_back({s, Scalar(1)});
    return make_trusted_class(n, Scalar(1), std::move(terms));
  }
  case SymbolKind::TotalDelta: {
    check_enumerable(n);
    BoundaryMap terms;
    for (Mask s = 1; s <= full_mask(n); ++s)
      if (subset_size(s) >= 2)
        terms.push_back({s, Scalar(1)});
    return make_trusted_class(n, Scalar(12), std::move(terms));
  }
  }
  throw DomainError("unknown symbol");
}

DivisorClassM1n linear_combine(std::span<const ClassTerm> terms) {
  if (terms.empty())
    throw DomainError("linear_combine needs at least one term");
  const int n = terms.front().cls.get().n();
  for (const auto &t : terms)
    require_same_space(n, t.cls.get().n());

  // Start from the largest boundary so it is scaled once and never re-merged.
  std::size_t big = 0;
  for (std::size_t k = 1; k < terms.size(); ++k)
    if (terms[k].cls.get().boundary().size() > terms[big].cls.get().boundary().size())
      big = k;

  Scalar lambda;
  BoundaryMap acc;
  if (!terms[big].coeff.is_zero())
    acc = scaled(terms[big].cls.get().boundary(), terms[big].coeff);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto &t = terms[k];
    if (t.coeff.is_zero())
      continue;
    lambda += t.coeff * t.cls.get().lambda();
    if (k != big)
      acc = merge_add(std::move(acc), t.cls.get().boundary(), t.coeff);
  }
  return make_trusted_class(n, std::move(lambda), std::move(acc));
}

DivisorClassM1n linear_combine(std::initializer_list<ClassTerm> terms) {
  return linear_combine(std::span<const ClassTerm>(terms.begin(), terms.size()));
}

DivisorClassM1n operator+(const DivisorClassM1n &a, const DivisorClassM1n &b) {
  return linear_combine({{Scalar(1), a}, {Scalar(1), b}});
}

DivisorClassM1n operator-(const DivisorClassM1n &a, const DivisorClassM1n &b) {
  return linear_combine({{Scalar(1), a}, {Scalar(-1), b}});
}

DivisorClassM1n operator*(const Scalar &s, const DivisorClassM1n &x) {
  return linear_combine({{s, x}});
}

Scalar pair(const CurveProfile &profile, const DivisorClassM1n &cls) {
  require_same_space(profile.n(), cls.n());
  Scalar acc = profile.on_lambda() * cls.lambda();
  const auto &p = profile.on_boundary();
  const auto &c = cls.boundary();
  // Probe the larger map from the smaller one.
  if (p.size() <= c.size()) {
    for (const auto &t : p)
      if (const Scalar *v = find_coeff(c, t.subset))
        acc += t.coeff * *v;
  } else {
    for (const auto &t : c)
      if (const Scalar *v = find_coeff(p, t.subset))
        acc += t.coeff * *v;
  }
  return acc;
}

void check_permutation(const Permutation &sigma, int n) {
  if (static_cast<int>(sigma.size()) != n)
    throw DomainError("permutation has " + std::to_string(sigma.size()) + " entries, expected " +
                      std::to_string(n));
  Mask seen = 0;
  for (int v : sigma) {
    if (v < 1 || v > n)
      throw MarkingIndexError("permutation image " + std::to_string(v) + " outside 1.." +
                              std::to_string(n));
    seen |= bit_of(v);
  }
  if (seen != full_mask(n))
    throw DomainError("permutation is not a bijection");
}

Mask permute_mask(Mask s, const Permutation &sigma) {
  Mask out = 0;
  while (s) {
    int i = std::countr_zero(s);
    out |= bit_of(sigma[i]);
    s &= s - 1;
  }
  return out;
}

namespace {
std::vector<BoundaryTerm> permuted(const BoundaryMap &map, const Permutation &sigma) {
  std::vector<BoundaryTerm> out;
  out.reserve(map.size());
  for (const auto &t : map)
    out.push_back({permute_mask(t.subset, sigma), t.coeff});
  return out;
}
} // namespace

DivisorClassM1n permute_markings(const DivisorClassM1n &cls, const Permutation &sigma) {
  check_permutation(sigma, cls.n());
  return DivisorClassM1n(cls.n(), cls.lambda(), permuted(cls.boundary(), sigma));
}

CurveProfile permute_markings(const CurveProfile &profile, const Permutation &sigma) {
  check_permutation(sigma, profile.n());
  return CurveProfile(profile.n(), profile.on_lambda(), permuted(profile.on_boundary(), sigma));
}

Permutation compose(const Permutation &sigma, const Permutation &tau) {
  if (sigma.size() != tau.size())
    throw DomainError("composing permutations of different sizes");
  Permutation out(tau.size());
  for (std::size_t i = 0; i < tau.size(); ++i)
    out[i] = sigma[tau[i] - 1];
  return out;
}

nlohmann::json to_json(const DivisorClassM1n &cls) {
  return {{"space", {{"type", "M1n"}, {"n", cls.n()}}},
          {"lambda", scalar_to_json(cls.lambda())},
          {"boundary", boundary_to_json(cls.boundary())}};
}

nlohmann::json to_json(const CurveProfile &profile) {
  return {{"space", {{"type", "M1n"}, {"n", profile.n()}}},
          {"on_lambda", scalar_to_json(profile.on_lambda())},
          {"on_boundary", boundary_to_json(profile.on_boundary())}};
}

nlohmann::json to_json(const DivisorClassMg &cls) {
  auto delta = nlohmann::json::array();
  for (const auto &d : cls.deltas())
    delta.push_back(scalar_to_json(d));
  return {{"space", {{"type", "Mg"}, {"g", cls.g()}}},
          {"lambda", scalar_to_json(cls.lambda())},
          {"delta_irr", scalar_to_json(cls.delta_irr())},
          {"delta", std::move(delta)}};
}

DivisorClassM1n class_m1n_from_json(const nlohmann::json &j) {
  int n = m1n_space(j);
  Scalar lambda = scalar_field(j, "lambda", "");
  auto terms = boundary_from_json(field(j, "boundary", ""), n, "/boundary");
  return DivisorClassM1n(n, std::move(lambda), std::move(terms));
}

CurveProfile profile_from_json(const nlohmann::json &j) {
  int n = m1n_space(j);
  Scalar on_lambda = scalar_field(j, "on_lambda", "");
  auto terms = boundary_from_json(field(j, "on_boundary", ""), n, "/on_boundary");
  return CurveProfile(n, std::move(on_lambda), std::move(terms));
}

DivisorClassMg class_mg_from_json(const nlohmann::json &j) {
  const auto &space = field(j, "space", "");
  if (field(space, "type", "/space") != "Mg")
    throw ParseError("expected space type \"Mg\"" + at("/space/type"));
  int g = int_field(space, "g", "/space");
  const auto &delta = field(j, "delta", "");
  if (!delta.is_array())
    throw ParseError("expected array" + at("/delta"));
  std::vector<Scalar> d;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    try {
      d.push_back(scalar_from_json(delta[k]));
    } catch (const ParseError &e) {
      throw ParseError(std::string(e.what()) + at("/delta/" + std::to_string(k)));
    }
  }
  try {
    return DivisorClassMg(g, scalar_field(j, "lambda", ""), scalar_field(j, "delta_irr", ""),
                          std::move(d));
  } catch (const ParseError &) {
    throw;
  } catch (const Error &e) {
    throw ParseError(std::string(e.what()) + at(""));
  }
}

} // namespace m1n
