#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

#include "cremona/errors.hpp"

namespace cremona {

using BigInt = mpz_class;

/// Arbitrary-precision rational in canonical form: gcd(|num|, den) = 1 and
/// den > 0. Backed by GMP; every constructor canonicalizes, so values are
/// always comparable structurally.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long long n) : v_(static_cast<long>(n)) {}
  Rational(const BigInt &n) : v_(n) {}
  Rational(long long num, long long den)
      : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}
  Rational(const BigInt &num, const BigInt &den) {
    if (den == 0)
      throw DivisionByZero("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  static Rational from_string(const std::string &text) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw Error("cannot parse rational '" + text + "'");
    if (q.get_den() == 0)
      throw DivisionByZero("rational with zero denominator");
    q.canonicalize();
    Rational r;
    r.v_ = q;
    return r;
  }

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational &operator+=(const Rational &o) { v_ += o.v_; return *this; }
  Rational &operator-=(const Rational &o) { v_ -= o.v_; return *this; }
  Rational &operator*=(const Rational &o) { v_ *= o.v_; return *this; }
  Rational &operator/=(const Rational &o) {
    if (o.is_zero())
      throw DivisionByZero("rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

  friend bool operator==(const Rational &a, const Rational &b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational &a, const Rational &b) {
    return !(a == b);
  }
  friend bool operator<(const Rational &a, const Rational &b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational &a, const Rational &b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational &a, const Rational &b) { return b < a; }
  friend bool operator>=(const Rational &a, const Rational &b) {
    return b <= a;
  }

  Rational inv() const {
    if (is_zero())
      throw DivisionByZero("inverse of zero");
    return Rational(den(), num());
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  /// Integer power; negative exponents invert (zero base rejected).
  Rational pow(long long e) const {
    if (e < 0)
      return inv().pow(-e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), static_cast<unsigned long>(e));
    Rational r;
    r.v_ = mpq_class(n, d); // already canonical when the base is canonical
    return r;
  }

  double to_double() const { return v_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const {
    if (v_.get_den() == 1)
      return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

private:
  explicit Rational(const mpq_class &q) : v_(q) {}
  mpq_class v_;
};

inline std::ostream &operator<<(std::ostream &os, const Rational &r) {
  return os << r.str();
}

} // namespace cremona
