#include "cremona/affine.hpp"

namespace cremona {

HomogPoly homogenize(const Poly2 &p, int degree) {
  if (degree < p.total_degree())
    throw Error("homogenization degree below total degree");
  HomogPoly r(degree);
  for (const auto &[e, c] : p.terms())
    r = poly_add(r,
                 HomogPoly::monomial({e.x, e.y, degree - e.total()}, c));
  return r;
}

Poly2 dehomogenize(const HomogPoly &p) {
  Poly2 r;
  for (const auto &[e, c] : p.terms())
    r += Poly2::monomial({e.x, e.y}, c);
  return r;
}

RatFunc2::RatFunc2(Poly2 num, Poly2 den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero())
    throw ZeroDenominator("identically zero denominator");
  if (num_.is_zero()) {
    den_ = Poly2::constant(Rational(1));
    return;
  }
  // Reduce via the homogeneous gcd: z-homogenizing a bivariate polynomial to
  // its own total degree introduces no z factor, so the gcd descends.
  HomogPoly hn = homogenize(num_, num_.total_degree());
  HomogPoly hd = homogenize(den_, den_.total_degree());
  HomogPoly g = poly_gcd(hn, hd);
  if (g.degree() > 0) {
    num_ = dehomogenize(poly_divexact(hn, g));
    den_ = dehomogenize(poly_divexact(hd, g));
  }
  Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    Rational inv = lc.inv();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatFunc2 RatFunc2::pow(long long e) const {
  if (e < 0) {
    if (is_zero())
      throw ZeroDenominator("negative power of the zero function");
    return RatFunc2(den_, num_).pow(-e);
  }
  RatFunc2 r = RatFunc2::constant(Rational(1));
  RatFunc2 base = *this;
  while (e > 0) {
    if (e & 1)
      r = r * base;
    e >>= 1;
    if (e > 0)
      base = base * base;
  }
  return r;
}

namespace {

RatFunc2 eval_poly(const Poly2 &p, const RatFunc2 &gx, const RatFunc2 &gy) {
  RatFunc2 acc = RatFunc2::constant(Rational(0));
  for (const auto &[e, c] : p.terms())
    acc = acc + RatFunc2::constant(c) * gx.pow(e.x) * gy.pow(e.y);
  return acc;
}

} // namespace

RatFunc2 RatFunc2::substitute(const RatFunc2 &gx, const RatFunc2 &gy) const {
  RatFunc2 n = eval_poly(num_, gx, gy);
  RatFunc2 d = eval_poly(den_, gx, gy);
  if (d.is_zero())
    throw ZeroDenominator("substitution lands in a zero denominator");
  return n / d;
}

std::string Poly2::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (first) {
      if (c.sign() < 0)
        out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    Rational a = c.abs();
    std::string vars;
    if (e.x > 0)
      vars += "x" + (e.x > 1 ? "^" + std::to_string(e.x) : "");
    if (e.y > 0) {
      if (!vars.empty())
        vars += "*";
      vars += "y" + (e.y > 1 ? "^" + std::to_string(e.y) : "");
    }
    if (vars.empty())
      out += a.str();
    else if (a.is_one())
      out += vars;
    else
      out += a.str() + "*" + vars;
  }
  return out;
}

std::string RatFunc2::str() const {
  Poly2 one = Poly2::constant(Rational(1));
  if (den_ == one)
    return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

} // namespace cremona
