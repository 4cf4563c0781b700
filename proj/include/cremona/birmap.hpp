#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cremona/affine.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Degrees past this are refused by compose unless the caller raises the cap.
inline constexpr long long kDefaultDegreeCap = 200;

/// Point of the projective plane with exact rational coordinates, not all
/// zero; equality is up to a common nonzero scalar.
struct ProjPoint {
  Rational X, Y, Z;

  ProjPoint(Rational x, Rational y, Rational z)
      : X(std::move(x)), Y(std::move(y)), Z(std::move(z)) {
    if (X.is_zero() && Y.is_zero() && Z.is_zero())
      throw AllZero("projective point with all coordinates zero");
  }

  friend bool operator==(const ProjPoint &p, const ProjPoint &q) {
    return p.X * q.Y == p.Y * q.X && p.X * q.Z == p.Z * q.X &&
           p.Y * q.Z == p.Z * q.Y;
  }
  friend bool operator!=(const ProjPoint &p, const ProjPoint &q) {
    return !(p == q);
  }

  std::string str() const {
    return "(" + X.str() + " : " + Y.str() + " : " + Z.str() + ")";
  }
};

/// Plane rational map in homogeneous coordinates: a normalized triple of
/// equal-degree homogeneous polynomials with trivial gcd, scaled so the first
/// nonzero component is monic under graded-lex.
class BirMap {
public:
  const HomogPoly &component(int i) const { return comps_[i]; }
  const std::array<HomogPoly, 3> &components() const { return comps_; }
  int degree() const { return comps_[0].degree(); }

  static BirMap identity();

  bool is_identity() const;

  /// Structural equality; equivalent to projective equality on normalized
  /// representatives.
  friend bool operator==(const BirMap &f, const BirMap &g) {
    return f.comps_ == g.comps_;
  }
  friend bool operator!=(const BirMap &f, const BirMap &g) { return !(f == g); }

  std::string str() const;
  std::string canonical_key() const;

private:
  explicit BirMap(std::array<HomogPoly, 3> comps) : comps_(std::move(comps)) {}
  std::array<HomogPoly, 3> comps_;

  friend BirMap birmap_new(const HomogPoly &, const HomogPoly &,
                           const HomogPoly &);
};

/// Normalizing constructor: checks equal degrees, divides out the gcd of the
/// triple, and scales the first nonzero leading coefficient to 1. The result
/// can have lower degree than the inputs.
BirMap birmap_new(const HomogPoly &f0, const HomogPoly &f1,
                  const HomogPoly &f2);

/// Projective equality through the cross-product test f_i g_j = f_j g_i.
bool equals(const BirMap &f, const BirMap &g);

/// f after g: compose(f, g)(p) = f(g(p)). Renormalizes, and refuses results
/// whose normalized degree exceeds the cap.
BirMap compose(const BirMap &f, const BirMap &g,
               long long degree_cap = kDefaultDegreeCap);

/// nullopt exactly when all three components vanish at p (indeterminacy).
std::optional<ProjPoint> apply(const BirMap &f, const ProjPoint &p);

enum class Truncation { LengthReached, DegreeCapHit };

/// deg(f^n) for n = 1..N, possibly stopping early at the degree cap.
struct DegreeSequence {
  std::vector<BigInt> entries;
  Truncation truncated = Truncation::LengthReached;
  long long degree_cap = kDefaultDegreeCap;
};

DegreeSequence degree_sequence(const BirMap &f, int N,
                               long long degree_cap = kDefaultDegreeCap);

/// Homogenize an affine map (fx(x,y), fy(x,y)) given by rational functions.
BirMap from_affine(const RatFunc2 &fx, const RatFunc2 &fy);

/// True iff the Jacobian determinant of the components is not identically
/// zero, i.e. the map does not collapse the plane onto a curve or point.
bool dominance_check(const BirMap &f);

} // namespace cremona
