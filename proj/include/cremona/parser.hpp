#pragma once

#include <memory>
#include <string>

#include "cremona/affine.hpp"
#include "cremona/birmap.hpp"

namespace cremona {

/// Expression tree for one coordinate of an affine map: rational literals,
/// the variables x and y, +, -, *, /, unary minus and integer powers.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow };
  Kind kind;
  Rational value;      // Number
  ExprPtr a, b;        // operands (Pow uses only a)
  long long exponent = 0;
};

struct MapExpr {
  ExprPtr fx;
  ExprPtr fy;
};

/// Parse "(expr, expr)". Standard precedence: ^ binds tightest, then unary
/// minus, then * and /, then + and -. Integer exponents only; implicit
/// multiplication is a syntax error. Errors carry the byte position.
MapExpr parse_map(const std::string &text);

/// Parse a single coordinate expression.
ExprPtr parse_expr(const std::string &text);

/// Canonical compact rendering; parse(print(e)) is structurally e.
std::string print_expr(const ExprPtr &e);
std::string print_map(const MapExpr &m);

bool expr_equal(const ExprPtr &a, const ExprPtr &b);

/// Exact evaluation into a rational function of x and y.
RatFunc2 expr_to_ratfunc(const ExprPtr &e);

/// Homogenized plane map of the affine pair.
BirMap map_expr_to_birmap(const MapExpr &m);

} // namespace cremona
