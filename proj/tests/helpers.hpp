#pragma once

#include <random>
#include <vector>

#include "cremona/birmap.hpp"
#include "cremona/homog_poly.hpp"
#include "cremona/parser.hpp"

namespace cremona::testing {

inline HomogPoly mono(int i, int j, int k, long long num = 1,
                      long long den = 1) {
  return HomogPoly::monomial({i, j, k}, Rational(num, den));
}

/// The standard quadratic involution (yz : xz : xy).
inline BirMap sigma() {
  return birmap_new(mono(0, 1, 1), mono(1, 0, 1), mono(1, 1, 0));
}

inline BirMap map_of(const std::string &text) {
  return map_expr_to_birmap(parse_map(text));
}

/// Deterministic random homogeneous polynomial of the given degree with
/// small coefficients; guaranteed nonzero.
inline HomogPoly random_poly(std::mt19937_64 &rng, int degree) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> keep(0, 2);
  HomogPoly p(degree);
  while (p.is_zero()) {
    std::vector<std::pair<Exp3, Rational>> terms;
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j) {
        if (keep(rng) == 0)
          continue;
        int c = coef(rng);
        if (c != 0)
          terms.push_back({{i, j, degree - i - j}, Rational(c)});
      }
    HomogPoly q(degree);
    for (const auto &[e, c] : terms)
      q = poly_add(q, HomogPoly::monomial(e, c));
    p = q;
  }
  return p;
}

/// Deterministic random normalized map of degree <= max_degree.
inline BirMap random_map(std::mt19937_64 &rng, int max_degree) {
  std::uniform_int_distribution<int> deg(1, max_degree);
  while (true) {
    int d = deg(rng);
    try {
      BirMap m = birmap_new(random_poly(rng, d), random_poly(rng, d),
                            random_poly(rng, d));
      if (m.degree() >= 1)
        return m;
    } catch (const Error &) {
      // degenerate draw; retry
    }
  }
}

} // namespace cremona::testing
