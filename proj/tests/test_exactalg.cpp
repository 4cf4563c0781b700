#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cremona/homog_poly.hpp"
#include "cremona/quad_ext.hpp"
#include "helpers.hpp"

using namespace cremona;
using cremona::testing::mono;
using cremona::testing::random_poly;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(1, -2) == Rational(-1, 2));
  CHECK(Rational(1, -2).den() == 2);
  CHECK(Rational(-6, -4) == Rational(3, 2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("rational arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
  CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
  CHECK(Rational(-2).pow(3) == Rational(-8));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
  CHECK(Rational(7, 3).inv() == Rational(3, 7));
  CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
  CHECK(Rational::from_string("22/7") == Rational(22, 7));
  CHECK(Rational(22, 7).str() == "22/7");
  CHECK(Rational(-4, 2).str() == "-2");
}

TEST_CASE("poly_add drops cancelled terms and keeps the degree tag") {
  HomogPoly a = mono(2, 1, 0);
  HomogPoly r = poly_add(a, poly_neg(a));
  CHECK(r.is_zero());
  CHECK(r.degree() == 3);

  HomogPoly s = poly_add(mono(1, 1, 1), mono(2, 1, 0));
  CHECK(s.term_count() == 2);
  CHECK(s.degree() == 3);

  CHECK(poly_add(mono(1, 1, 1, 1, 2), mono(1, 1, 1, 1, 2)) == mono(1, 1, 1));

  CHECK_THROWS_AS(poly_add(mono(1, 0, 0), mono(1, 1, 0)), DegreeMismatch);
}

TEST_CASE("poly_mul") {
  CHECK(poly_mul(mono(1, 0, 0), mono(0, 1, 0)) == mono(1, 1, 0));

  // (x+y)(x-y) = x^2 - y^2
  HomogPoly xpy = poly_add(mono(1, 0, 0), mono(0, 1, 0));
  HomogPoly xmy = poly_sub(mono(1, 0, 0), mono(0, 1, 0));
  CHECK(poly_mul(xpy, xmy) ==
        poly_sub(mono(2, 0, 0), mono(0, 2, 0)));

  HomogPoly zero3(3);
  HomogPoly prod = poly_mul(zero3, xpy);
  CHECK(prod.is_zero());
  CHECK(prod.degree() == 4);
}

TEST_CASE("poly_pow and evaluation") {
  HomogPoly xpy = poly_add(mono(1, 0, 0), mono(0, 1, 0));
  HomogPoly sq = poly_pow(xpy, 2);
  CHECK(sq.coefficient({1, 1, 0}) == Rational(2));
  CHECK(poly_evaluate(sq, Rational(1), Rational(2), Rational(0)) ==
        Rational(9));
  CHECK(poly_pow(xpy, 0) == HomogPoly::constant(Rational(1)));
}

TEST_CASE("poly_gcd on the worked examples") {
  // gcd(x^2 y z, x y^2 z) = x y z
  CHECK(poly_gcd(mono(2, 1, 1), mono(1, 2, 1)) == mono(1, 1, 1));

  // gcd(x(y+z), z(y+z)) = y + z, verified by exact division of both inputs
  HomogPoly ypz = poly_add(mono(0, 1, 0), mono(0, 0, 1));
  HomogPoly a = poly_mul(mono(1, 0, 0), ypz);
  HomogPoly b = poly_mul(mono(0, 0, 1), ypz);
  HomogPoly g = poly_gcd(a, b);
  CHECK(g == ypz);
  CHECK(poly_mul(poly_divexact(a, g), g) == a);
  CHECK(poly_mul(poly_divexact(b, g), g) == b);

  // coprime squares
  CHECK(poly_gcd(mono(2, 0, 0), mono(0, 2, 0)) ==
        HomogPoly::constant(Rational(1)));

  // gcd with itself is the monic normalization
  HomogPoly p = poly_add(mono(2, 0, 0, 2), mono(0, 2, 0, 4));
  CHECK(poly_gcd(p, p) == poly_monic(p));
  CHECK(poly_gcd(p, p).leading_coefficient() == Rational(1));

  CHECK_THROWS_AS(poly_gcd(HomogPoly(2), HomogPoly(2)), BothZero);
  CHECK(poly_gcd(HomogPoly(2), p) == poly_monic(p));
}

TEST_CASE("gcd of products and exact-division property, random") {
  std::mt19937_64 rng(20240811);
  std::uniform_int_distribution<int> deg(1, 2);
  for (int trial = 0; trial < 30; ++trial) {
    HomogPoly p = random_poly(rng, deg(rng));
    HomogPoly q = random_poly(rng, deg(rng));
    HomogPoly r = random_poly(rng, deg(rng));

    HomogPoly g = poly_gcd(p, q);
    HomogPoly quot = poly_divexact(p, g);
    CHECK(poly_mul(quot, g) == p);

    // gcd(p r, q r) = monic(gcd(p, q) * r)
    CHECK(poly_gcd(poly_mul(p, r), poly_mul(q, r)) ==
          poly_monic(poly_mul(g, r)));
  }
}

TEST_CASE("poly_mul is associative and commutative, random") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    HomogPoly p = random_poly(rng, 2);
    HomogPoly q = random_poly(rng, 1);
    HomogPoly r = random_poly(rng, 2);
    CHECK(poly_mul(p, q) == poly_mul(q, p));
    CHECK(poly_mul(poly_mul(p, q), r) == poly_mul(p, poly_mul(q, r)));
  }
}

TEST_CASE("exact division failure") {
  CHECK(!poly_try_divexact(mono(2, 0, 0), mono(0, 1, 0)).has_value());
  HomogPoly xpy = poly_add(mono(1, 0, 0), mono(0, 1, 0));
  CHECK(!poly_try_divexact(mono(2, 0, 0), xpy).has_value());
  CHECK_THROWS_AS(poly_divexact(mono(2, 0, 0), xpy), Error);
  CHECK_THROWS_AS(poly_divexact(xpy, HomogPoly(0)), DivisionByZero);
}

TEST_CASE("derivatives") {
  // d/dx (x^2 y) = 2 x y
  CHECK(poly_derivative(mono(2, 1, 0), 0) == mono(1, 1, 0, 2));
  CHECK(poly_derivative(mono(0, 1, 0), 0).is_zero());
}

TEST_CASE("quadratic extension: reduction, inverse, trace and norm") {
  QuadModulus m{3, 1}; // L^2 = 3L - 1
  QuadExtElem L = QuadExtElem::lambda(m);

  // L * L = 3L - 1
  CHECK(L * L == QuadExtElem(Rational(-1), Rational(3), m));

  // inv(L) = 3 - L, and L * (3 - L) = 1
  QuadExtElem three_minus_L(Rational(3), Rational(-1), m);
  CHECK(L.inv() == three_minus_L);
  CHECK(L * three_minus_L == QuadExtElem::from_rational(Rational(1), m));

  QuadExtElem u(Rational(1), Rational(1), m);
  QuadExtElem v(Rational(1), Rational(-1), m);
  CHECK(u + v == QuadExtElem::from_rational(Rational(2), m));

  CHECK(L.trace() == Rational(3));
  CHECK(L.norm() == Rational(1));

  CHECK_THROWS_AS(QuadExtElem::from_rational(Rational(0), m).inv(),
                  DivisionByZero);
  QuadModulus other{1, -1};
  CHECK_THROWS_AS(L + QuadExtElem::lambda(other), ModulusMismatch);
}

TEST_CASE("quadratic extension: u * inv(u) = 1 on random elements") {
  for (QuadModulus m : {QuadModulus{3, 1}, QuadModulus{1, -1},
                        QuadModulus{4, -1}}) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long long> c(-9, 9);
    QuadExtElem one = QuadExtElem::from_rational(Rational(1), m);
    int done = 0;
    while (done < 100) {
      QuadExtElem u(Rational(c(rng), 1 + std::abs(c(rng))),
                    Rational(c(rng), 1 + std::abs(c(rng))), m);
      if (u.is_zero())
        continue;
      CHECK(u * u.inv() == one);
      ++done;
    }
    CHECK(QuadExtElem::lambda(m).trace() == Rational(m.t));
    CHECK(QuadExtElem::lambda(m).norm() == Rational(m.d));
  }
}
