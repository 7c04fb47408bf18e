#pragma once

// Exact coefficient arithmetic: GMP-backed rationals and univariate
// polynomials over Q in the formal parameter `a`.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>
#include <json.hpp>

namespace m1n {

using BigInt = mpz_class;

class Rat {
public:
  Rat() = default;
  Rat(long v) : v_(v) {}
  Rat(int v) : v_(v) {}
  Rat(const BigInt &num);
  Rat(const BigInt &num, const BigInt &den);
  explicit Rat(const mpq_class &q);

  // Accepts "p", "-p" or "p/q" (q may be negative; result is normalized).
  static Rat parse(std::string_view text);

  const mpq_class &raw() const { return v_; }
  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "p" when the denominator is 1, else "p/q".
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat &operator+=(const Rat &o) { v_ += o.v_; return *this; }
  Rat &operator-=(const Rat &o) { v_ -= o.v_; return *this; }
  Rat &operator*=(const Rat &o) { v_ *= o.v_; return *this; }
  Rat &operator/=(const Rat &o);

  friend Rat operator+(Rat a, const Rat &b) { return a += b; }
  friend Rat operator-(Rat a, const Rat &b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat &b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat &b) { return a /= b; }

  friend bool operator==(const Rat &a, const Rat &b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat &a, const Rat &b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class v_{0};
};

std::ostream &operator<<(std::ostream &os, const Rat &r);

Rat pow(const Rat &base, unsigned exp);

// Polynomial in the formal parameter `a`, ascending coefficients, trailing
// zeros trimmed (the zero polynomial has no coefficients).
class PolyRat {
public:
  using Coeffs = boost::container::small_vector<Rat, 2>;

  PolyRat() = default;
  PolyRat(const Rat &c);
  PolyRat(long c) : PolyRat(Rat(c)) {}
  PolyRat(int c) : PolyRat(Rat(c)) {}
  PolyRat(std::initializer_list<Rat> ascending);
  explicit PolyRat(Coeffs ascending);

  // The monomial a.
  static PolyRat param();

  const Coeffs &coeffs() const { return c_; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(); }
  Rat constant_value() const { return coeff(0); }

  PolyRat operator-() const;
  PolyRat &operator+=(const PolyRat &o);
  PolyRat &operator-=(const PolyRat &o);
  PolyRat &operator*=(const PolyRat &o);
  PolyRat &operator*=(const Rat &s);

  friend PolyRat operator+(PolyRat a, const PolyRat &b) { return a += b; }
  friend PolyRat operator-(PolyRat a, const PolyRat &b) { return a -= b; }
  friend PolyRat operator*(const PolyRat &a, const PolyRat &b);
  friend PolyRat operator*(PolyRat a, const Rat &s) { return a *= s; }
  friend PolyRat operator*(const Rat &s, PolyRat a) { return a *= s; }

  // Exact division by a nonzero rational.
  PolyRat divided_by(const Rat &s) const;

  friend bool operator==(const PolyRat &a, const PolyRat &b) {
    return a.c_ == b.c_;
  }

  // Human-readable, e.g. "13a - 11".
  std::string pretty() const;

private:
  void trim();
  Coeffs c_;
};

std::ostream &operator<<(std::ostream &os, const PolyRat &p);

// Every coefficient in the project lives in Q[a]; plain rationals are
// degree-0 elements.
using Scalar = PolyRat;

BigInt factorial(unsigned n);
// C(n, k); zero when k > n.
Rat binom(unsigned n, unsigned k);
BigInt binom_int(unsigned n, unsigned k);

Rat poly_eval(const PolyRat &p, const Rat &x);

// JSON forms: Rat as "p/q" / "p"; PolyRat as an array of Rat strings in
// ascending degree. `scalar_to_json` uses the Rat string for constants and
// the array otherwise; `poly_to_json` always emits the array.
nlohmann::json rat_to_json(const Rat &r);
Rat rat_from_json(const nlohmann::json &j);
nlohmann::json poly_to_json(const PolyRat &p);
nlohmann::json scalar_to_json(const Scalar &s);
// Accepts a Rat string, an integer, or an array of either.
Scalar scalar_from_json(const nlohmann::json &j);

} // namespace m1n
