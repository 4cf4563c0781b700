#include "cremona/birmap.hpp"

#include <algorithm>

namespace cremona {

BirMap birmap_new(const HomogPoly &f0, const HomogPoly &f1,
                  const HomogPoly &f2) {
  std::array<HomogPoly, 3> c{f0, f1, f2};
  if (c[0].degree() != c[1].degree() || c[0].degree() != c[2].degree())
    throw DegreeMismatch("map components of unequal degree");
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    throw AllZero("map with all components zero");

  // Divide out the common factor of the nonzero components.
  HomogPoly g(0);
  bool have = false;
  for (const auto &f : c) {
    if (f.is_zero())
      continue;
    g = have ? poly_gcd(g, f) : poly_monic(f);
    have = true;
    if (g.degree() == 0)
      break;
  }
  if (g.degree() > 0)
    for (auto &f : c)
      f = poly_divexact(f, g);

  // Joint scaling: leading coefficient of the first nonzero component -> 1.
  for (const auto &f : c) {
    if (f.is_zero())
      continue;
    Rational lc = f.leading_coefficient();
    if (!lc.is_one()) {
      Rational inv = lc.inv();
      for (auto &h : c)
        h = poly_scale(h, inv);
    }
    break;
  }
  return BirMap(std::move(c));
}

BirMap BirMap::identity() {
  return birmap_new(HomogPoly::monomial({1, 0, 0}),
                    HomogPoly::monomial({0, 1, 0}),
                    HomogPoly::monomial({0, 0, 1}));
}

bool BirMap::is_identity() const { return *this == identity(); }

bool equals(const BirMap &f, const BirMap &g) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      HomogPoly lhs = poly_mul(f.component(i), g.component(j));
      HomogPoly rhs = poly_mul(f.component(j), g.component(i));
      if (lhs != rhs)
        return false;
    }
  return true;
}

BirMap compose(const BirMap &f, const BirMap &g, long long degree_cap) {
  int df = f.degree();

  // Power tables for g's components up to the degree of f.
  std::array<std::vector<HomogPoly>, 3> pw;
  for (int i = 0; i < 3; ++i) {
    pw[i].reserve(df + 1);
    pw[i].push_back(HomogPoly::constant(Rational(1)));
    for (int k = 1; k <= df; ++k)
      pw[i].push_back(poly_mul(pw[i].back(), g.component(i)));
  }

  int raw_degree = df * g.degree();
  std::array<HomogPoly, 3> comps{HomogPoly(raw_degree), HomogPoly(raw_degree),
                                 HomogPoly(raw_degree)};
  for (int i = 0; i < 3; ++i)
    for (const auto &[e, c] : f.component(i).terms())
      comps[i] = poly_add(
          comps[i],
          poly_scale(poly_mul(poly_mul(pw[0][e.x], pw[1][e.y]), pw[2][e.z]),
                     c));

  BirMap r = birmap_new(comps[0], comps[1], comps[2]);
  if (r.degree() > degree_cap)
    throw DegreeCapExceeded(r.degree(), degree_cap, "compose");
  return r;
}

std::optional<ProjPoint> apply(const BirMap &f, const ProjPoint &p) {
  Rational a = poly_evaluate(f.component(0), p.X, p.Y, p.Z);
  Rational b = poly_evaluate(f.component(1), p.X, p.Y, p.Z);
  Rational c = poly_evaluate(f.component(2), p.X, p.Y, p.Z);
  if (a.is_zero() && b.is_zero() && c.is_zero())
    return std::nullopt;
  return ProjPoint(std::move(a), std::move(b), std::move(c));
}

DegreeSequence degree_sequence(const BirMap &f, int N, long long degree_cap) {
  if (N < 1)
    throw Error("degree_sequence needs N >= 1");
  DegreeSequence seq;
  seq.degree_cap = degree_cap;
  seq.entries.push_back(f.degree());
  BirMap acc = f;
  for (int n = 2; n <= N; ++n) {
    try {
      acc = compose(f, acc, degree_cap);
    } catch (const DegreeCapExceeded &) {
      seq.truncated = Truncation::DegreeCapHit;
      return seq;
    }
    seq.entries.push_back(acc.degree());
  }
  return seq;
}

BirMap from_affine(const RatFunc2 &fx, const RatFunc2 &fy) {
  // (fx : fy : 1) over the common denominator, then homogenized.
  Poly2 A = fx.num() * fy.den();
  Poly2 B = fy.num() * fx.den();
  Poly2 C = fx.den() * fy.den();
  int d = std::max({A.total_degree(), B.total_degree(), C.total_degree()});
  return birmap_new(homogenize(A, d), homogenize(B, d), homogenize(C, d));
}

bool dominance_check(const BirMap &f) {
  std::array<std::array<HomogPoly, 3>, 3> J{};
  for (int i = 0; i < 3; ++i)
    for (int v = 0; v < 3; ++v)
      J[i][v] = poly_derivative(f.component(i), v);

  auto minor2 = [&](int r1, int r2, int c1, int c2) {
    return poly_sub(poly_mul(J[r1][c1], J[r2][c2]),
                    poly_mul(J[r1][c2], J[r2][c1]));
  };
  HomogPoly det =
      poly_add(poly_sub(poly_mul(J[0][0], minor2(1, 2, 1, 2)),
                        poly_mul(J[0][1], minor2(1, 2, 0, 2))),
               poly_mul(J[0][2], minor2(1, 2, 0, 1)));
  return !det.is_zero();
}

std::string BirMap::str() const {
  return "(" + comps_[0].str() + " : " + comps_[1].str() + " : " +
         comps_[2].str() + ")";
}

std::string BirMap::canonical_key() const {
  return comps_[0].canonical_key() + "||" + comps_[1].canonical_key() + "||" +
         comps_[2].canonical_key();
}

} // namespace cremona
