#pragma once

#include <string>

#include "cremona/errors.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Defining relation lambda^2 = t*lambda - d, i.e. lambda is a root of
/// X^2 - tX + d.
struct QuadModulus {
  long long t = 0;
  long long d = 0;

  long long discriminant() const { return t * t - 4 * d; }
  friend bool operator==(const QuadModulus &a, const QuadModulus &b) {
    return a.t == b.t && a.d == b.d;
  }
};

/// Element a + b*lambda of Q[lambda]/(lambda^2 - t*lambda + d).
class QuadExtElem {
public:
  QuadExtElem(Rational a, Rational b, QuadModulus m)
      : a_(std::move(a)), b_(std::move(b)), mod_(m) {}

  static QuadExtElem from_rational(Rational a, QuadModulus m) {
    return QuadExtElem(std::move(a), Rational(0), m);
  }
  static QuadExtElem lambda(QuadModulus m) {
    return QuadExtElem(Rational(0), Rational(1), m);
  }

  const Rational &a() const { return a_; }
  const Rational &b() const { return b_; }
  const QuadModulus &modulus() const { return mod_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  friend QuadExtElem operator+(const QuadExtElem &u, const QuadExtElem &v) {
    check_same(u, v);
    return {u.a_ + v.a_, u.b_ + v.b_, u.mod_};
  }
  friend QuadExtElem operator-(const QuadExtElem &u, const QuadExtElem &v) {
    check_same(u, v);
    return {u.a_ - v.a_, u.b_ - v.b_, u.mod_};
  }
  friend QuadExtElem operator-(const QuadExtElem &u) {
    return {-u.a_, -u.b_, u.mod_};
  }

  // (a1 + b1 L)(a2 + b2 L) with L^2 reduced to tL - d.
  friend QuadExtElem operator*(const QuadExtElem &u, const QuadExtElem &v) {
    check_same(u, v);
    Rational t(u.mod_.t), d(u.mod_.d);
    Rational cross = u.b_ * v.b_;
    return {u.a_ * v.a_ - d * cross, u.a_ * v.b_ + u.b_ * v.a_ + t * cross,
            u.mod_};
  }

  friend bool operator==(const QuadExtElem &u, const QuadExtElem &v) {
    return u.mod_ == v.mod_ && u.a_ == v.a_ && u.b_ == v.b_;
  }
  friend bool operator!=(const QuadExtElem &u, const QuadExtElem &v) {
    return !(u == v);
  }

  /// Galois conjugate a + b(t - lambda).
  QuadExtElem conj() const {
    return {a_ + b_ * Rational(mod_.t), -b_, mod_};
  }

  /// trace(u) = u + conj(u), a rational.
  Rational trace() const { return a_ + a_ + b_ * Rational(mod_.t); }

  /// norm(u) = u * conj(u), a rational.
  Rational norm() const {
    return a_ * a_ + a_ * b_ * Rational(mod_.t) + b_ * b_ * Rational(mod_.d);
  }

  QuadExtElem inv() const {
    Rational n = norm();
    if (n.is_zero())
      throw DivisionByZero("quadratic extension element has zero norm");
    QuadExtElem c = conj();
    return {c.a_ / n, c.b_ / n, mod_};
  }

  friend QuadExtElem operator/(const QuadExtElem &u, const QuadExtElem &v) {
    return u * v.inv();
  }

  /// Numeric value with lambda mapped to the given real root of the modulus.
  double evaluate(double lambda_root) const {
    return a_.to_double() + b_.to_double() * lambda_root;
  }

  std::string str() const {
    if (b_.is_zero())
      return a_.str();
    std::string s;
    if (!a_.is_zero())
      s = a_.str() + (b_.sign() < 0 ? " - " : " + ");
    else if (b_.sign() < 0)
      s = "-";
    Rational ab = b_.abs();
    if (!ab.is_one())
      s += ab.str() + "*";
    s += "L";
    return s;
  }

private:
  static void check_same(const QuadExtElem &u, const QuadExtElem &v) {
    if (!(u.mod_ == v.mod_))
      throw ModulusMismatch("mixing distinct quadratic extensions");
  }

  Rational a_;
  Rational b_;
  QuadModulus mod_;
};

} // namespace cremona
