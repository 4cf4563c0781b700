#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "cremona/birmap.hpp"
#include "cremona/dynclass.hpp"
#include "cremona/quad_ext.hpp"

namespace cremona {

/// Element [[p,q],[r,s]] of GL(2,Z), acting as (x,y) -> (x^p y^q, x^r y^s).
struct IntMatrix2 {
  long long p = 1, q = 0, r = 0, s = 1;

  long long det() const { return p * s - q * r; }
  long long trace() const { return p + s; }
  bool is_unimodular() const { return det() == 1 || det() == -1; }
  bool is_identity() const { return p == 1 && q == 0 && r == 0 && s == 1; }

  IntMatrix2 transpose() const { return {p, r, q, s}; }

  /// Exact inverse; valid on unimodular matrices.
  IntMatrix2 inverse() const {
    long long d = det();
    return {d * s, -d * q, -d * r, d * p};
  }

  friend IntMatrix2 operator*(const IntMatrix2 &a, const IntMatrix2 &b) {
    return {a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s,
            a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s};
  }
  friend bool operator==(const IntMatrix2 &a, const IntMatrix2 &b) {
    return a.p == b.p && a.q == b.q && a.r == b.r && a.s == b.s;
  }

  std::string str() const {
    return "[[" + std::to_string(p) + "," + std::to_string(q) + "],[" +
           std::to_string(r) + "," + std::to_string(s) + "]]";
  }
};

void require_unimodular(const IntMatrix2 &m);

/// Multiplicative coordinate of the diagonal torus: a nonzero rational times
/// a Laurent monomial in named symbols, e.g. 2/3 * alpha^2 * beta^-1.
/// Symbolic entries let one identity cover all values of the symbols at once.
class TorusCoord {
public:
  TorusCoord() : scalar_(1) {}
  explicit TorusCoord(Rational scalar) : scalar_(std::move(scalar)) {
    if (scalar_.is_zero())
      throw Error("torus coordinate must be nonzero");
  }
  static TorusCoord symbol(const std::string &name) {
    TorusCoord t;
    t.symbols_[name] = 1;
    return t;
  }

  const Rational &scalar() const { return scalar_; }
  const std::map<std::string, int> &symbol_exponents() const {
    return symbols_;
  }
  bool is_rational() const { return symbols_.empty(); }
  bool is_one() const { return scalar_.is_one() && symbols_.empty(); }

  friend TorusCoord operator*(const TorusCoord &a, const TorusCoord &b) {
    TorusCoord r;
    r.scalar_ = a.scalar_ * b.scalar_;
    r.symbols_ = a.symbols_;
    for (const auto &[name, e] : b.symbols_) {
      int v = (r.symbols_[name] += e);
      if (v == 0)
        r.symbols_.erase(name);
    }
    return r;
  }

  TorusCoord pow(long long e) const {
    TorusCoord r;
    r.scalar_ = scalar_.pow(e);
    if (e != 0)
      for (const auto &[name, k] : symbols_)
        r.symbols_[name] = static_cast<int>(k * e);
    return r;
  }

  TorusCoord inv() const { return pow(-1); }

  friend bool operator==(const TorusCoord &a, const TorusCoord &b) {
    return a.scalar_ == b.scalar_ && a.symbols_ == b.symbols_;
  }
  friend bool operator!=(const TorusCoord &a, const TorusCoord &b) {
    return !(a == b);
  }

  std::string str() const;

private:
  Rational scalar_;
  std::map<std::string, int> symbols_;
};

/// Element (diag, M) of the semidirect product of the torus by GL(2,Z);
/// acts as (x, y) -> (d1 * x^p y^q, d2 * x^r y^s).
struct ToricElement {
  std::array<TorusCoord, 2> diag{};
  IntMatrix2 matrix{};

  static ToricElement identity() { return {}; }
  static ToricElement diagonal(TorusCoord a, TorusCoord b) {
    return {{std::move(a), std::move(b)}, IntMatrix2{}};
  }
  static ToricElement monomial(const IntMatrix2 &m) {
    return {{TorusCoord{}, TorusCoord{}}, m};
  }

  bool is_identity() const {
    return diag[0].is_one() && diag[1].is_one() && matrix.is_identity();
  }

  friend bool operator==(const ToricElement &a, const ToricElement &b) {
    return a.diag == b.diag && a.matrix == b.matrix;
  }

  std::string str() const;
};

/// M acting multiplicatively on the torus: (d1, d2) -> (d1^p d2^q, d1^r d2^s).
std::array<TorusCoord, 2> matrix_action(const IntMatrix2 &m,
                                        const std::array<TorusCoord, 2> &d);

/// Semidirect product law, matching composition of the underlying maps.
ToricElement toric_compose(const ToricElement &g, const ToricElement &h);

ToricElement toric_inverse(const ToricElement &g);

/// [phi_M, (a x, b y)] computed through the group law. The result is always
/// diagonal with exponent matrix [[p-1, q], [r, s-1]] applied to (a, b).
ToricElement toric_commutator(const IntMatrix2 &m,
                              const std::array<TorusCoord, 2> &diag);

/// The monomial map of M as a plane map: clear negative exponents with the
/// minimal monomial factor, homogenize with z, normalize.
BirMap monomial_birmap(const IntMatrix2 &m);

/// Concrete toric element as a plane map; diagonal entries must be rational.
BirMap toric_to_birmap(const ToricElement &e);

/// Logarithmic 1-form p_c dx/x + q_c dy/y, i.e. (q_c x dy + p_c y dx)/(xy),
/// with coefficients in the quadratic extension of the eigenvalue; stored
/// with the first nonzero coefficient normalized to 1.
struct FoliationForm {
  QuadExtElem p_c;
  QuadExtElem q_c;
};

struct SpectralData {
  LambdaEstimate radius;    // method exact-spectral
  QuadModulus char_poly;    // X^2 - t X + d
  std::optional<int> finite_order;
  std::optional<std::pair<FoliationForm, FoliationForm>> foliations;
};

/// Exact spectral analysis of a GL(2,Z) matrix: characteristic data, spectral
/// radius, finite order when present, and for spectral radius > 1 the two
/// invariant foliations read off the eigenvectors of the transpose.
SpectralData spectral_data(const IntMatrix2 &m);

bool is_hyperbolic(const IntMatrix2 &m);

/// Exact check of the eigen-equation for the transpose of M applied to the
/// form's coefficient vector. Errors with NotHyperbolic below radius > 1.
bool foliation_pullback_check(const IntMatrix2 &m, const FoliationForm &form);

/// 2x2 matrix with arbitrary-precision entries, for iterating monomial maps
/// far past the range of machine integers.
struct BigMatrix2 {
  BigInt p, q, r, s;

  static BigMatrix2 from(const IntMatrix2 &m) {
    return {BigInt(static_cast<long>(m.p)), BigInt(static_cast<long>(m.q)),
            BigInt(static_cast<long>(m.r)), BigInt(static_cast<long>(m.s))};
  }
  friend BigMatrix2 operator*(const BigMatrix2 &a, const BigMatrix2 &b) {
    return {a.p * b.p + a.q * b.r, a.p * b.q + a.q * b.s,
            a.r * b.p + a.s * b.r, a.r * b.q + a.s * b.s};
  }
};

/// Degree of the monomial map of M, computed arithmetically (no polynomial
/// is built); agrees with monomial_birmap(M).degree() in machine range.
BigInt monomial_map_degree(const BigMatrix2 &m);

/// Fast-path degree sequence deg(phi_M^n) = deg(phi_{M^n}) for n = 1..N via
/// matrix powers.
DegreeSequence monomial_degree_sequence(const IntMatrix2 &m, int N);

/// Generators of the order-6 matrix group whose monomial maps form the
/// standard finite (torsion) example.
std::array<IntMatrix2, 2> s3_generator_matrices();

} // namespace cremona
