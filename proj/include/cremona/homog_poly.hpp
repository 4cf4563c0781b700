#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cremona/errors.hpp"
#include "cremona/rational.hpp"

namespace cremona {

/// Exponent triple (i, j, k) for x^i y^j z^k.
struct Exp3 {
  int x = 0;
  int y = 0;
  int z = 0;

  int total() const { return x + y + z; }
  int operator[](int v) const { return v == 0 ? x : (v == 1 ? y : z); }

  friend bool operator==(const Exp3 &a, const Exp3 &b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
};

/// Graded-lexicographic order with x > y > z, largest term first, so the
/// leading term of a polynomial sits at begin() of its term map.
struct GradedLexDesc {
  bool operator()(const Exp3 &a, const Exp3 &b) const {
    if (a.total() != b.total())
      return a.total() > b.total();
    if (a.x != b.x)
      return a.x > b.x;
    if (a.y != b.y)
      return a.y > b.y;
    return a.z > b.z;
  }
};

/// Homogeneous polynomial in x, y, z with exact rational coefficients.
/// Invariants: every stored exponent triple sums to degree(); no zero
/// coefficients are stored. The zero polynomial keeps an explicit degree tag
/// so homogeneity stays checkable through arithmetic.
class HomogPoly {
public:
  using TermMap = std::map<Exp3, Rational, GradedLexDesc>;

  /// Zero polynomial of the given degree.
  explicit HomogPoly(int degree = 0) : degree_(check_degree(degree)) {}

  /// Build from (exponent, coefficient) pairs; zero coefficients are dropped,
  /// repeated exponents accumulate. Every exponent must sum to degree.
  HomogPoly(int degree, std::initializer_list<std::pair<Exp3, Rational>> ts)
      : degree_(check_degree(degree)) {
    for (const auto &[e, c] : ts)
      accumulate(e, c);
  }

  static HomogPoly monomial(Exp3 e, Rational c = Rational(1)) {
    HomogPoly p(e.total());
    p.accumulate(e, std::move(c));
    return p;
  }

  /// The rational constant c as a degree-0 polynomial.
  static HomogPoly constant(Rational c) { return monomial({0, 0, 0}, std::move(c)); }

  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return degree_ == 0; }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t term_count() const { return terms_.size(); }
  const TermMap &terms() const { return terms_; }

  /// Leading exponent/coefficient under graded-lex (poly must be nonzero).
  const Exp3 &leading_exponent() const { return terms_.begin()->first; }
  const Rational &leading_coefficient() const { return terms_.begin()->second; }

  Rational coefficient(Exp3 e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Largest exponent of variable v (0,1,2 for x,y,z); 0 for the zero poly.
  int degree_in(int v) const {
    int d = 0;
    for (const auto &[e, c] : terms_)
      d = std::max(d, e[v]);
    return d;
  }

  friend bool operator==(const HomogPoly &a, const HomogPoly &b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const HomogPoly &a, const HomogPoly &b) {
    return !(a == b);
  }

  /// Rendering like "x^2*y - 1/2*y*z^2"; "0" for the zero polynomial.
  std::string str() const;

  /// Canonical machine form: terms as "i,j,k:num[/den]" joined by ";",
  /// prefixed with the degree. Total order on polynomials via string compare.
  std::string canonical_key() const;

private:
  static int check_degree(int d) {
    if (d < 0)
      throw Error("negative polynomial degree");
    return d;
  }

  void accumulate(const Exp3 &e, const Rational &c) {
    if (e.x < 0 || e.y < 0 || e.z < 0)
      throw Error("negative exponent in homogeneous polynomial");
    if (e.total() != degree_)
      throw DegreeMismatch("term degree " + std::to_string(e.total()) +
                           " != declared degree " + std::to_string(degree_));
    if (c.is_zero())
      return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero())
        terms_.erase(it);
    }
  }

  int degree_;
  TermMap terms_;

  friend HomogPoly poly_add(const HomogPoly &, const HomogPoly &);
  friend HomogPoly poly_sub(const HomogPoly &, const HomogPoly &);
  friend HomogPoly poly_neg(const HomogPoly &);
  friend HomogPoly poly_mul(const HomogPoly &, const HomogPoly &);
  friend HomogPoly poly_scale(const HomogPoly &, const Rational &);
  friend HomogPoly poly_derivative(const HomogPoly &, int);
  friend std::optional<HomogPoly> poly_try_divexact(const HomogPoly &,
                                                    const HomogPoly &);
};

HomogPoly poly_add(const HomogPoly &p, const HomogPoly &q);
HomogPoly poly_sub(const HomogPoly &p, const HomogPoly &q);
HomogPoly poly_neg(const HomogPoly &p);
HomogPoly poly_mul(const HomogPoly &p, const HomogPoly &q);
HomogPoly poly_scale(const HomogPoly &p, const Rational &c);
HomogPoly poly_pow(const HomogPoly &p, int e);

/// Exact quotient p / d, or nullopt when d does not divide p.
std::optional<HomogPoly> poly_try_divexact(const HomogPoly &p,
                                           const HomogPoly &d);

/// Exact quotient; throws when the division is not exact.
HomogPoly poly_divexact(const HomogPoly &p, const HomogPoly &d);

/// Greatest common divisor, monic under graded-lex (leading coefficient 1).
/// Degree-0 gcds normalize to the constant 1. Errors with BothZero when both
/// arguments are zero.
HomogPoly poly_gcd(const HomogPoly &p, const HomogPoly &q);

/// Scale so the leading coefficient is 1 (identity on the zero polynomial).
HomogPoly poly_monic(const HomogPoly &p);

/// Partial derivative with respect to variable v (0,1,2 for x,y,z).
HomogPoly poly_derivative(const HomogPoly &p, int v);

/// Exact evaluation at a rational point.
Rational poly_evaluate(const HomogPoly &p, const Rational &x,
                       const Rational &y, const Rational &z);

inline std::ostream &operator<<(std::ostream &os, const HomogPoly &p) {
  return os << p.str();
}

} // namespace cremona
