#include "cremona/toric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace cremona {

void require_unimodular(const IntMatrix2 &m) {
  if (!m.is_unimodular())
    throw NotUnimodular("matrix " + m.str() + " has determinant " +
                        std::to_string(m.det()));
}

std::string TorusCoord::str() const {
  std::string out;
  if (!scalar_.is_one() || symbols_.empty())
    out = scalar_.str();
  for (const auto &[name, e] : symbols_) {
    if (!out.empty())
      out += "*";
    out += name;
    if (e != 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

std::string ToricElement::str() const {
  return "(diag(" + diag[0].str() + ", " + diag[1].str() + "), " +
         matrix.str() + ")";
}

std::array<TorusCoord, 2> matrix_action(const IntMatrix2 &m,
                                        const std::array<TorusCoord, 2> &d) {
  return {d[0].pow(m.p) * d[1].pow(m.q), d[0].pow(m.r) * d[1].pow(m.s)};
}

ToricElement toric_compose(const ToricElement &g, const ToricElement &h) {
  auto acted = matrix_action(g.matrix, h.diag);
  return {{g.diag[0] * acted[0], g.diag[1] * acted[1]}, g.matrix * h.matrix};
}

ToricElement toric_inverse(const ToricElement &g) {
  IntMatrix2 minv = g.matrix.inverse();
  auto acted = matrix_action(minv, g.diag);
  return {{acted[0].inv(), acted[1].inv()}, minv};
}

ToricElement toric_commutator(const IntMatrix2 &m,
                              const std::array<TorusCoord, 2> &diag) {
  require_unimodular(m);
  ToricElement g = ToricElement::monomial(m);
  ToricElement h = ToricElement::diagonal(diag[0], diag[1]);
  return toric_compose(toric_compose(g, h),
                       toric_compose(toric_inverse(g), toric_inverse(h)));
}

BirMap monomial_birmap(const IntMatrix2 &m) {
  require_unimodular(m);
  // Minimal monomial multiplier clearing negative exponents of
  // (x^p y^q, x^r y^s, 1), then z-homogenization.
  long long m1 = std::max({0LL, -m.p, -m.r});
  long long m2 = std::max({0LL, -m.q, -m.s});
  std::array<std::array<long long, 2>, 3> e{{{m.p + m1, m.q + m2},
                                             {m.r + m1, m.s + m2},
                                             {m1, m2}}};
  long long D = 0;
  for (const auto &ei : e)
    D = std::max(D, ei[0] + ei[1]);
  return birmap_new(
      HomogPoly::monomial({static_cast<int>(e[0][0]), static_cast<int>(e[0][1]),
                           static_cast<int>(D - e[0][0] - e[0][1])}),
      HomogPoly::monomial({static_cast<int>(e[1][0]), static_cast<int>(e[1][1]),
                           static_cast<int>(D - e[1][0] - e[1][1])}),
      HomogPoly::monomial({static_cast<int>(e[2][0]), static_cast<int>(e[2][1]),
                           static_cast<int>(D - e[2][0] - e[2][1])}));
}

BirMap toric_to_birmap(const ToricElement &el) {
  if (!el.diag[0].is_rational() || !el.diag[1].is_rational())
    throw Error("toric element with symbolic entries has no concrete map");
  BirMap mono = monomial_birmap(el.matrix);
  return birmap_new(poly_scale(mono.component(0), el.diag[0].scalar()),
                    poly_scale(mono.component(1), el.diag[1].scalar()),
                    mono.component(2));
}

bool is_hyperbolic(const IntMatrix2 &m) {
  require_unimodular(m);
  long long t = std::llabs(m.trace());
  return (m.det() == 1 && t >= 3) || (m.det() == -1 && t >= 1);
}

namespace {

FoliationForm transpose_eigenform(const IntMatrix2 &m, bool plus_root) {
  // Eigenvector of the transpose [[p,r],[q,s]] for mu: (r, mu - p),
  // normalized so the first coordinate is 1. Hyperbolicity forces r != 0.
  QuadModulus mod{m.trace(), m.det()};
  QuadExtElem mu = plus_root
                       ? QuadExtElem::lambda(mod)
                       : QuadExtElem(Rational(mod.t), Rational(-1), mod);
  QuadExtElem r = QuadExtElem::from_rational(Rational(m.r), mod);
  QuadExtElem p = QuadExtElem::from_rational(Rational(m.p), mod);
  return {QuadExtElem::from_rational(Rational(1), mod), (mu - p) / r};
}

} // namespace

SpectralData spectral_data(const IntMatrix2 &m) {
  require_unimodular(m);
  SpectralData out;
  out.char_poly = {m.trace(), m.det()};

  long long disc = out.char_poly.discriminant();
  double radius = 1.0;
  if (is_hyperbolic(m))
    radius = (std::llabs(m.trace()) + std::sqrt(static_cast<double>(disc))) / 2.0;
  out.radius.value = radius;
  out.radius.n_used = 0;
  out.radius.method = LambdaEstimate::Method::ExactSpectral;

  IntMatrix2 acc{};
  for (int k = 1; k <= 12; ++k) {
    acc = acc * m;
    if (acc.is_identity()) {
      out.finite_order = k;
      break;
    }
  }

  if (is_hyperbolic(m))
    out.foliations = std::make_pair(transpose_eigenform(m, true),
                                    transpose_eigenform(m, false));
  return out;
}

bool foliation_pullback_check(const IntMatrix2 &m, const FoliationForm &form) {
  if (!is_hyperbolic(m))
    throw NotHyperbolic("foliation check needs spectral radius > 1");
  if (form.p_c.is_zero() && form.q_c.is_zero())
    return false;
  QuadModulus mod = form.p_c.modulus();
  auto c = [&](long long v) {
    return QuadExtElem::from_rational(Rational(v), mod);
  };
  // Transpose of M applied to (p_c, q_c).
  QuadExtElem w1 = c(m.p) * form.p_c + c(m.r) * form.q_c;
  QuadExtElem w2 = c(m.q) * form.p_c + c(m.s) * form.q_c;
  // Proportionality over the extension field.
  return w1 * form.q_c == w2 * form.p_c;
}

BigInt monomial_map_degree(const BigMatrix2 &m) {
  BigInt zero(0);
  BigInt m1 = std::max({zero, BigInt(-m.p), BigInt(-m.r)});
  BigInt m2 = std::max({zero, BigInt(-m.q), BigInt(-m.s)});
  std::array<std::array<BigInt, 2>, 3> e{{{BigInt(m.p + m1), BigInt(m.q + m2)},
                                          {BigInt(m.r + m1), BigInt(m.s + m2)},
                                          {m1, m2}}};
  BigInt D = 0;
  for (const auto &ei : e)
    D = std::max(D, BigInt(ei[0] + ei[1]));
  BigInt cx = std::min({e[0][0], e[1][0], e[2][0]});
  BigInt cy = std::min({e[0][1], e[1][1], e[2][1]});
  BigInt cz = std::min({BigInt(D - e[0][0] - e[0][1]),
                        BigInt(D - e[1][0] - e[1][1]),
                        BigInt(D - e[2][0] - e[2][1])});
  return BigInt(D - cx - cy - cz);
}

DegreeSequence monomial_degree_sequence(const IntMatrix2 &m, int N) {
  require_unimodular(m);
  DegreeSequence seq;
  seq.degree_cap = -1; // not capped; degrees computed arithmetically
  BigMatrix2 base = BigMatrix2::from(m);
  BigMatrix2 acc = base;
  for (int n = 1; n <= N; ++n) {
    seq.entries.push_back(monomial_map_degree(acc));
    if (n < N)
      acc = acc * base;
  }
  return seq;
}

std::array<IntMatrix2, 2> s3_generator_matrices() {
  return {IntMatrix2{1, 0, 1, -1}, IntMatrix2{-1, 1, 0, 1}};
}

} // namespace cremona
