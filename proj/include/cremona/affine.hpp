#pragma once

#include <map>
#include <string>
#include <utility>

#include "cremona/errors.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Exponent pair for x^i y^j, graded-lex descending (x > y).
struct Exp2 {
  int x = 0;
  int y = 0;
  int total() const { return x + y; }
  friend bool operator==(const Exp2 &a, const Exp2 &b) {
    return a.x == b.x && a.y == b.y;
  }
};

struct Exp2Order {
  bool operator()(const Exp2 &a, const Exp2 &b) const {
    if (a.total() != b.total())
      return a.total() > b.total();
    return a.x > b.x;
  }
};

/// Sparse bivariate polynomial over Q, not necessarily homogeneous; the
/// affine-chart counterpart of HomogPoly.
class Poly2 {
public:
  using TermMap = std::map<Exp2, Rational, Exp2Order>;

  Poly2() = default;
  static Poly2 constant(Rational c) { return monomial({0, 0}, std::move(c)); }
  static Poly2 var_x() { return monomial({1, 0}, Rational(1)); }
  static Poly2 var_y() { return monomial({0, 1}, Rational(1)); }
  static Poly2 monomial(Exp2 e, Rational c) {
    Poly2 p;
    if (!c.is_zero())
      p.terms_.emplace(e, std::move(c));
    return p;
  }

  bool is_zero() const { return terms_.empty(); }
  int total_degree() const {
    return terms_.empty() ? 0 : terms_.begin()->first.total();
  }
  const TermMap &terms() const { return terms_; }
  const Rational &leading_coefficient() const {
    return terms_.begin()->second;
  }

  Poly2 &operator+=(const Poly2 &o) {
    for (const auto &[e, c] : o.terms_)
      accumulate(e, c);
    return *this;
  }
  friend Poly2 operator+(Poly2 a, const Poly2 &b) { return a += b; }
  friend Poly2 operator-(const Poly2 &a) {
    Poly2 r;
    for (const auto &[e, c] : a.terms_)
      r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly2 operator-(Poly2 a, const Poly2 &b) { return a += -b; }
  friend Poly2 operator*(const Poly2 &a, const Poly2 &b) {
    Poly2 r;
    for (const auto &[ea, ca] : a.terms_)
      for (const auto &[eb, cb] : b.terms_)
        r.accumulate({ea.x + eb.x, ea.y + eb.y}, ca * cb);
    return r;
  }
  Poly2 scaled(const Rational &c) const {
    Poly2 r;
    if (c.is_zero())
      return r;
    for (const auto &[e, pc] : terms_)
      r.terms_.emplace(e, pc * c);
    return r;
  }

  friend bool operator==(const Poly2 &a, const Poly2 &b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const Poly2 &a, const Poly2 &b) { return !(a == b); }

  std::string str() const;

private:
  void accumulate(const Exp2 &e, const Rational &c) {
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }
  TermMap terms_;
};

/// z-homogenization of p to the given total degree (which must be >= deg p).
HomogPoly homogenize(const Poly2 &p, int degree);

/// Evaluation at z = 1; inverse of homogenize on homogeneous inputs.
Poly2 dehomogenize(const HomogPoly &p);

/// Rational function in x and y, kept reduced (gcd of numerator and
/// denominator cancelled) with a monic denominator.
class RatFunc2 {
public:
  RatFunc2() : num_(), den_(Poly2::constant(Rational(1))) {}
  RatFunc2(Poly2 num, Poly2 den);

  static RatFunc2 from_poly(Poly2 p) {
    return RatFunc2(std::move(p), Poly2::constant(Rational(1)));
  }
  static RatFunc2 constant(Rational c) {
    return from_poly(Poly2::constant(std::move(c)));
  }
  static RatFunc2 var_x() { return from_poly(Poly2::var_x()); }
  static RatFunc2 var_y() { return from_poly(Poly2::var_y()); }

  const Poly2 &num() const { return num_; }
  const Poly2 &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RatFunc2 operator+(const RatFunc2 &a, const RatFunc2 &b) {
    return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc2 operator-(const RatFunc2 &a, const RatFunc2 &b) {
    return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc2 operator-(const RatFunc2 &a) {
    RatFunc2 r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc2 operator*(const RatFunc2 &a, const RatFunc2 &b) {
    return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc2 operator/(const RatFunc2 &a, const RatFunc2 &b) {
    if (b.is_zero())
      throw ZeroDenominator("division by an identically zero function");
    return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
  }

  RatFunc2 pow(long long e) const;

  /// Value of this function at x := gx, y := gy.
  RatFunc2 substitute(const RatFunc2 &gx, const RatFunc2 &gy) const;

  friend bool operator==(const RatFunc2 &a, const RatFunc2 &b) {
    return a.num_ == b.num_ && a.den_ == b.den_; // both stored reduced
  }
  friend bool operator!=(const RatFunc2 &a, const RatFunc2 &b) {
    return !(a == b);
  }

  std::string str() const;

private:
  Poly2 num_;
  Poly2 den_;
};

} // namespace cremona
