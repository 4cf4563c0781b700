#include "cremona/parser.hpp"

#include <cctype>

namespace cremona {

namespace {

ExprPtr make(Expr e) { return std::make_shared<const Expr>(std::move(e)); }

ExprPtr number(Rational v) {
  return make({Expr::Kind::Number, std::move(v), nullptr, nullptr, 0});
}

class Parser {
public:
  explicit Parser(const std::string &text) : text_(text) {}

  MapExpr parse_pair() {
    skip_ws();
    expect('(');
    ExprPtr fx = parse_sum();
    skip_ws();
    expect(',');
    ExprPtr fy = parse_sum();
    skip_ws();
    expect(')');
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError("trailing input", pos_);
    return {fx, fy};
  }

  ExprPtr parse_single() {
    ExprPtr e = parse_sum();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError("trailing input", pos_);
    return e;
  }

private:
  ExprPtr parse_sum() {
    ExprPtr e = parse_product();
    while (true) {
      skip_ws();
      if (accept('+'))
        e = make({Expr::Kind::Add, {}, e, parse_product(), 0});
      else if (accept('-'))
        e = make({Expr::Kind::Sub, {}, e, parse_product(), 0});
      else
        return e;
    }
  }

  ExprPtr parse_product() {
    ExprPtr e = parse_factor();
    while (true) {
      skip_ws();
      if (accept('*'))
        e = make({Expr::Kind::Mul, {}, e, parse_factor(), 0});
      else if (accept('/'))
        e = make({Expr::Kind::Div, {}, e, parse_factor(), 0});
      else
        return e;
    }
  }

  ExprPtr parse_factor() {
    skip_ws();
    if (accept('-'))
      return make({Expr::Kind::Neg, {}, parse_factor(), nullptr, 0});
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    skip_ws();
    if (!accept('^'))
      return base;
    return make({Expr::Kind::Pow, {}, base, nullptr, parse_exponent()});
  }

  long long parse_exponent() {
    skip_ws();
    bool paren = accept('(');
    skip_ws();
    bool neg = accept('-');
    skip_ws();
    std::size_t at = pos_;
    if (at >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[at])))
      throw SyntaxError("expected integer exponent", pos_);
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000)
        throw SyntaxError("exponent too large", at);
      ++pos_;
    }
    if (paren) {
      skip_ws();
      expect(')');
    }
    return neg ? -v : v;
  }

  ExprPtr parse_atom() {
    skip_ws();
    if (pos_ >= text_.size())
      throw SyntaxError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ExprPtr e = parse_sum();
      skip_ws();
      expect(')');
      return e;
    }
    if (c == 'x') {
      ++pos_;
      return make({Expr::Kind::VarX, {}, nullptr, nullptr, 0});
    }
    if (c == 'y') {
      ++pos_;
      return make({Expr::Kind::VarY, {}, nullptr, nullptr, 0});
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      return number(Rational::from_string(text_.substr(start, pos_ - start)));
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c))
      throw SyntaxError(std::string("expected '") + c + "'", pos_);
  }

  const std::string &text_;
  std::size_t pos_ = 0;
};

// Precedence for printing: Add/Sub 1, Mul/Div 2, Neg 3, Pow 4, atoms 5.
int precedence(const ExprPtr &e) {
  switch (e->kind) {
  case Expr::Kind::Add:
  case Expr::Kind::Sub:
    return 1;
  case Expr::Kind::Mul:
  case Expr::Kind::Div:
    return 2;
  case Expr::Kind::Neg:
    return 3;
  case Expr::Kind::Pow:
    return 4;
  default:
    return 5;
  }
}

std::string print_prec(const ExprPtr &e, int min_prec) {
  std::string s;
  switch (e->kind) {
  case Expr::Kind::Number:
    s = e->value.str();
    break;
  case Expr::Kind::VarX:
    s = "x";
    break;
  case Expr::Kind::VarY:
    s = "y";
    break;
  case Expr::Kind::Neg:
    s = "-" + print_prec(e->a, 4);
    break;
  case Expr::Kind::Add:
    s = print_prec(e->a, 1) + "+" + print_prec(e->b, 2);
    break;
  case Expr::Kind::Sub:
    s = print_prec(e->a, 1) + "-" + print_prec(e->b, 2);
    break;
  case Expr::Kind::Mul:
    s = print_prec(e->a, 2) + "*" + print_prec(e->b, 3);
    break;
  case Expr::Kind::Div:
    s = print_prec(e->a, 2) + "/" + print_prec(e->b, 3);
    break;
  case Expr::Kind::Pow:
    s = print_prec(e->a, 5) + "^" + std::to_string(e->exponent);
    break;
  }
  if (precedence(e) < min_prec)
    return "(" + s + ")";
  return s;
}

} // namespace

MapExpr parse_map(const std::string &text) {
  return Parser(text).parse_pair();
}

ExprPtr parse_expr(const std::string &text) {
  return Parser(text).parse_single();
}

std::string print_expr(const ExprPtr &e) { return print_prec(e, 0); }

std::string print_map(const MapExpr &m) {
  return "(" + print_expr(m.fx) + ", " + print_expr(m.fy) + ")";
}

bool expr_equal(const ExprPtr &a, const ExprPtr &b) {
  if (!a || !b)
    return !a && !b;
  if (a->kind != b->kind)
    return false;
  switch (a->kind) {
  case Expr::Kind::Number:
    return a->value == b->value;
  case Expr::Kind::VarX:
  case Expr::Kind::VarY:
    return true;
  case Expr::Kind::Neg:
    return expr_equal(a->a, b->a);
  case Expr::Kind::Pow:
    return a->exponent == b->exponent && expr_equal(a->a, b->a);
  default:
    return expr_equal(a->a, b->a) && expr_equal(a->b, b->b);
  }
}

RatFunc2 expr_to_ratfunc(const ExprPtr &e) {
  switch (e->kind) {
  case Expr::Kind::Number:
    return RatFunc2::constant(e->value);
  case Expr::Kind::VarX:
    return RatFunc2::var_x();
  case Expr::Kind::VarY:
    return RatFunc2::var_y();
  case Expr::Kind::Neg:
    return -expr_to_ratfunc(e->a);
  case Expr::Kind::Add:
    return expr_to_ratfunc(e->a) + expr_to_ratfunc(e->b);
  case Expr::Kind::Sub:
    return expr_to_ratfunc(e->a) - expr_to_ratfunc(e->b);
  case Expr::Kind::Mul:
    return expr_to_ratfunc(e->a) * expr_to_ratfunc(e->b);
  case Expr::Kind::Div:
    return expr_to_ratfunc(e->a) / expr_to_ratfunc(e->b);
  case Expr::Kind::Pow:
    return expr_to_ratfunc(e->a).pow(e->exponent);
  }
  throw Error("unreachable expression kind");
}

BirMap map_expr_to_birmap(const MapExpr &m) {
  return from_affine(expr_to_ratfunc(m.fx), expr_to_ratfunc(m.fy));
}

} // namespace cremona
