#include "cremona/homog_poly.hpp"

#include <algorithm>
#include <sstream>

namespace cremona {

HomogPoly poly_add(const HomogPoly &p, const HomogPoly &q) {
  if (p.degree() != q.degree())
    throw DegreeMismatch("poly_add: degree " + std::to_string(p.degree()) +
                         " vs " + std::to_string(q.degree()));
  HomogPoly r = p;
  for (const auto &[e, c] : q.terms())
    r.accumulate(e, c);
  return r;
}

HomogPoly poly_neg(const HomogPoly &p) {
  HomogPoly r(p.degree());
  for (const auto &[e, c] : p.terms())
    r.terms_.emplace(e, -c);
  return r;
}

HomogPoly poly_sub(const HomogPoly &p, const HomogPoly &q) {
  return poly_add(p, poly_neg(q));
}

HomogPoly poly_mul(const HomogPoly &p, const HomogPoly &q) {
  HomogPoly r(p.degree() + q.degree());
  for (const auto &[ep, cp] : p.terms())
    for (const auto &[eq, cq] : q.terms())
      r.accumulate({ep.x + eq.x, ep.y + eq.y, ep.z + eq.z}, cp * cq);
  return r;
}

HomogPoly poly_scale(const HomogPoly &p, const Rational &c) {
  if (c.is_zero())
    return HomogPoly(p.degree());
  HomogPoly r(p.degree());
  for (const auto &[e, pc] : p.terms())
    r.terms_.emplace(e, pc * c);
  return r;
}

HomogPoly poly_pow(const HomogPoly &p, int e) {
  if (e < 0)
    throw Error("negative polynomial power");
  HomogPoly r = HomogPoly::constant(Rational(1));
  HomogPoly base = p;
  while (e > 0) {
    if (e & 1)
      r = poly_mul(r, base);
    e >>= 1;
    if (e > 0)
      base = poly_mul(base, base);
  }
  return r;
}

HomogPoly poly_monic(const HomogPoly &p) {
  if (p.is_zero())
    return p;
  return poly_scale(p, p.leading_coefficient().inv());
}

HomogPoly poly_derivative(const HomogPoly &p, int v) {
  HomogPoly r(std::max(p.degree() - 1, 0));
  for (const auto &[e, c] : p.terms()) {
    int k = e[v];
    if (k == 0)
      continue;
    Exp3 d = e;
    (v == 0 ? d.x : v == 1 ? d.y : d.z) -= 1;
    r.accumulate(d, c * Rational(k));
  }
  return r;
}

Rational poly_evaluate(const HomogPoly &p, const Rational &x,
                       const Rational &y, const Rational &z) {
  Rational acc(0);
  for (const auto &[e, c] : p.terms())
    acc += c * x.pow(e.x) * y.pow(e.y) * z.pow(e.z);
  return acc;
}

namespace {

// d scaled by the single term c * x^e.x y^e.y z^e.z.
HomogPoly mul_term(const HomogPoly &d, const Exp3 &e, const Rational &c) {
  HomogPoly r(d.degree() + e.total());
  for (const auto &[ed, cd] : d.terms())
    r = poly_add(r, HomogPoly::monomial({ed.x + e.x, ed.y + e.y, ed.z + e.z},
                                        cd * c));
  return r;
}

} // namespace

std::optional<HomogPoly> poly_try_divexact(const HomogPoly &p,
                                           const HomogPoly &d) {
  if (d.is_zero())
    throw DivisionByZero("division by the zero polynomial");
  if (p.is_zero())
    return HomogPoly(std::max(p.degree() - d.degree(), 0));
  if (p.degree() < d.degree())
    return std::nullopt;

  HomogPoly q(p.degree() - d.degree());
  HomogPoly r = p;
  const Exp3 &de = d.leading_exponent();
  const Rational &dc = d.leading_coefficient();
  while (!r.is_zero()) {
    const Exp3 &re = r.leading_exponent();
    Exp3 t{re.x - de.x, re.y - de.y, re.z - de.z};
    if (t.x < 0 || t.y < 0 || t.z < 0)
      return std::nullopt;
    Rational tc = r.leading_coefficient() / dc;
    q.terms_.emplace(t, tc);
    r = poly_sub(r, mul_term(d, t, tc));
  }
  return q;
}

HomogPoly poly_divexact(const HomogPoly &p, const HomogPoly &d) {
  auto q = poly_try_divexact(p, d);
  if (!q)
    throw Error("inexact polynomial division");
  return *q;
}

// ---------------------------------------------------------------------------
// Multivariate gcd: monomial content splitting, then recursive content /
// primitive-part reduction with a subresultant pseudo-remainder sequence in
// the main variable. Homogeneity is preserved by every step, so the whole
// computation stays inside HomogPoly.
// ---------------------------------------------------------------------------

namespace {

Exp3 min_exponents(const HomogPoly &p) {
  Exp3 m = p.leading_exponent();
  for (const auto &[e, c] : p.terms()) {
    m.x = std::min(m.x, e.x);
    m.y = std::min(m.y, e.y);
    m.z = std::min(m.z, e.z);
  }
  return m;
}

HomogPoly shift_down(const HomogPoly &p, const Exp3 &m) {
  HomogPoly r(p.degree() - m.total());
  for (const auto &[e, c] : p.terms())
    r = poly_add(r, HomogPoly::monomial({e.x - m.x, e.y - m.y, e.z - m.z}, c));
  return r;
}

// Coefficient of v^k in p, as a polynomial with the v-exponent removed.
HomogPoly coeff_of(const HomogPoly &p, int v, int k) {
  HomogPoly r(std::max(p.degree() - k, 0));
  for (const auto &[e, c] : p.terms()) {
    if (e[v] != k)
      continue;
    Exp3 d = e;
    (v == 0 ? d.x : v == 1 ? d.y : d.z) = 0;
    r = poly_add(r, HomogPoly::monomial(d, c));
  }
  return r;
}

HomogPoly one_poly() { return HomogPoly::constant(Rational(1)); }

HomogPoly gcd_nonzero(const HomogPoly &p, const HomogPoly &q);

HomogPoly content_in(const HomogPoly &p, int v) {
  int d = p.degree_in(v);
  HomogPoly cont(0);
  bool have = false;
  for (int k = 0; k <= d; ++k) {
    HomogPoly c = coeff_of(p, v, k);
    if (c.is_zero())
      continue;
    cont = have ? gcd_nonzero(cont, c) : poly_monic(c);
    have = true;
    if (cont.degree() == 0)
      return one_poly();
  }
  return cont;
}

// Pseudo-remainder of A by B in variable v: lc(B)^(deg A - deg B + 1) * A
// reduced modulo B.
HomogPoly pseudo_rem(const HomogPoly &A, const HomogPoly &B, int v) {
  int dB = B.degree_in(v);
  HomogPoly lcB = coeff_of(B, v, dB);
  HomogPoly R = A;
  int e = A.degree_in(v) - dB + 1;
  while (!R.is_zero() && R.degree_in(v) >= dB) {
    int dR = R.degree_in(v);
    HomogPoly lcR = coeff_of(R, v, dR);
    Exp3 shift{0, 0, 0};
    (v == 0 ? shift.x : v == 1 ? shift.y : shift.z) = dR - dB;
    R = poly_sub(poly_mul(lcB, R),
                 poly_mul(poly_mul(lcR, HomogPoly::monomial(shift)), B));
    --e;
  }
  if (e > 0)
    R = poly_mul(poly_pow(lcB, e), R);
  return R;
}

// Both inputs nonzero, at least one non-constant, and both free of monomial
// content in the chosen main variable path.
HomogPoly gcd_stripped(const HomogPoly &p, const HomogPoly &q) {
  int v = 0;
  while (v < 3 && p.degree_in(v) == 0 && q.degree_in(v) == 0)
    ++v;
  if (v == 3)
    return one_poly(); // both constant

  if (p.degree_in(v) == 0)
    return gcd_nonzero(p, content_in(q, v));
  if (q.degree_in(v) == 0)
    return gcd_nonzero(content_in(p, v), q);

  HomogPoly contP = content_in(p, v);
  HomogPoly contQ = content_in(q, v);
  HomogPoly c = gcd_nonzero(contP, contQ);
  HomogPoly A = poly_divexact(p, contP);
  HomogPoly B = poly_divexact(q, contQ);
  if (A.degree_in(v) < B.degree_in(v))
    std::swap(A, B);

  HomogPoly g = one_poly();
  HomogPoly h = one_poly();
  while (true) {
    int delta = A.degree_in(v) - B.degree_in(v);
    HomogPoly R = pseudo_rem(A, B, v);
    if (R.is_zero())
      break;
    if (R.degree_in(v) == 0) {
      B = one_poly(); // primitive parts are coprime in v
      break;
    }
    HomogPoly newB = poly_divexact(R, poly_mul(g, poly_pow(h, delta)));
    g = coeff_of(B, v, B.degree_in(v));
    if (delta == 1)
      h = g;
    else if (delta > 1)
      h = poly_divexact(poly_pow(g, delta), poly_pow(h, delta - 1));
    A = std::move(B);
    B = std::move(newB);
  }
  if (B.degree_in(v) > 0)
    B = poly_divexact(B, content_in(B, v));
  else
    B = one_poly();
  return poly_monic(poly_mul(c, B));
}

HomogPoly gcd_nonzero(const HomogPoly &p, const HomogPoly &q) {
  if (p.degree() == 0 || q.degree() == 0)
    return one_poly();
  if (p == q)
    return poly_monic(p);

  Exp3 mp = min_exponents(p);
  Exp3 mq = min_exponents(q);
  Exp3 common{std::min(mp.x, mq.x), std::min(mp.y, mq.y), std::min(mp.z, mq.z)};
  HomogPoly ps = shift_down(p, mp);
  HomogPoly qs = shift_down(q, mq);

  HomogPoly core = (ps.degree() == 0 || qs.degree() == 0)
                       ? one_poly()
                       : gcd_stripped(ps, qs);
  if (common.total() == 0)
    return core;
  return poly_mul(core, HomogPoly::monomial(common));
}

} // namespace

HomogPoly poly_gcd(const HomogPoly &p, const HomogPoly &q) {
  if (p.is_zero() && q.is_zero())
    throw BothZero("gcd of two zero polynomials");
  if (p.is_zero())
    return poly_monic(q);
  if (q.is_zero())
    return poly_monic(p);
  return gcd_nonzero(p, q);
}

// ---------------------------------------------------------------------------
// Rendering
// ---------------------------------------------------------------------------

namespace {

void append_var(std::string &s, const char *name, int e) {
  if (e == 0)
    return;
  if (!s.empty())
    s += "*";
  s += name;
  if (e > 1)
    s += "^" + std::to_string(e);
}

} // namespace

std::string HomogPoly::str() const {
  if (is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    Rational a = c.abs();
    if (first) {
      if (c.sign() < 0)
        out += "-";
      first = false;
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    std::string vars;
    append_var(vars, "x", e.x);
    append_var(vars, "y", e.y);
    append_var(vars, "z", e.z);
    if (vars.empty())
      out += a.str();
    else if (a.is_one())
      out += vars;
    else
      out += a.str() + "*" + vars;
  }
  return out;
}

std::string HomogPoly::canonical_key() const {
  std::string out = std::to_string(degree_) + "|";
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first)
      out += ";";
    first = false;
    out += std::to_string(e.x) + "," + std::to_string(e.y) + "," +
           std::to_string(e.z) + ":" + c.str();
  }
  return out;
}

} // namespace cremona
