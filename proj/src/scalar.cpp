#include "m1n/scalar.hpp"

#include <ostream>
#include <sstream>

#include "m1n/error.hpp"

namespace m1n {

Rat::Rat(const BigInt &num) : v_(num) {}

Rat::Rat(const BigInt &num, const BigInt &den) {
  if (den == 0)
    throw DomainError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(const mpq_class &q) : v_(q) { v_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  auto valid_int = [](const std::string &t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size())
      return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9')
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den))
    throw ParseError("malformed rational '" + s + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  if (den[0] == '+')
    den.erase(0, 1);
  return Rat(BigInt(num), BigInt(den));
}

std::string Rat::str() const {
  if (v_.get_den() == 1)
    return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat &Rat::operator/=(const Rat &o) {
  if (o.is_zero())
    throw DomainError("division by zero");
  v_ /= o.v_;
  return *this;
}

std::ostream &operator<<(std::ostream &os, const Rat &r) { return os << r.str(); }

Rat pow(const Rat &base, unsigned exp) {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), exp);
  mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), exp);
  return Rat(n, d);
}

PolyRat::PolyRat(const Rat &c) {
  if (!c.is_zero())
    c_.push_back(c);
}

PolyRat::PolyRat(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }

PolyRat::PolyRat(Coeffs ascending) : c_(std::move(ascending)) { trim(); }

PolyRat PolyRat::param() { return PolyRat({Rat(0), Rat(1)}); }

void PolyRat::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

PolyRat PolyRat::operator-() const {
  PolyRat r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

PolyRat &PolyRat::operator+=(const PolyRat &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[k] += o.c_[k];
  trim();
  return *this;
}

PolyRat &PolyRat::operator-=(const PolyRat &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[k] -= o.c_[k];
  trim();
  return *this;
}

PolyRat operator*(const PolyRat &a, const PolyRat &b) {
  if (a.is_zero() || b.is_zero())
    return {};
  PolyRat::Coeffs out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      out[i + j] += a.c_[i] * b.c_[j];
  return PolyRat(std::move(out));
}

PolyRat &PolyRat::operator*=(const PolyRat &o) { return *this = *this * o; }

PolyRat &PolyRat::operator*=(const Rat &s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto &c : c_)
    c *= s;
  return *this;
}

PolyRat PolyRat::divided_by(const Rat &s) const {
  if (s.is_zero())
    throw DomainError("division by zero");
  PolyRat r = *this;
  for (auto &c : r.c_)
    c /= s;
  return r;
}

std::string PolyRat::pretty() const {
  if (c_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rat &c = c_[k];
    if (c.is_zero())
      continue;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == Rat(1);
    if (k == 0 || !unit)
      os << mag.str();
    if (k >= 1)
      os << "a";
    if (k >= 2)
      os << "^" << k;
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const PolyRat &p) { return os << p.pretty(); }

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binom_int(unsigned n, unsigned k) {
  if (k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Rat binom(unsigned n, unsigned k) { return Rat(binom_int(n, k)); }

Rat poly_eval(const PolyRat &p, const Rat &x) {
  Rat acc;
  const auto &c = p.coeffs();
  for (std::size_t k = c.size(); k-- > 0;)
    acc = acc * x + c[k];
  return acc;
}

nlohmann::json rat_to_json(const Rat &r) { return r.str(); }

Rat rat_from_json(const nlohmann::json &j) {
  if (j.is_string())
    return Rat::parse(j.get<std::string>());
  if (j.is_number_integer())
    return Rat(j.get<long>());
  throw ParseError("expected a rational string or integer, got " + j.dump());
}

nlohmann::json poly_to_json(const PolyRat &p) {
  auto arr = nlohmann::json::array();
  for (const auto &c : p.coeffs())
    arr.push_back(c.str());
  return arr;
}

nlohmann::json scalar_to_json(const Scalar &s) {
  if (s.is_constant())
    return s.constant_value().str();
  return poly_to_json(s);
}

Scalar scalar_from_json(const nlohmann::json &j) {
  if (j.is_array()) {
    PolyRat::Coeffs c;
    for (const auto &e : j)
      c.push_back(rat_from_json(e));
    return PolyRat(std::move(c));
  }
  return PolyRat(rat_from_json(j));
}

} // namespace m1n
