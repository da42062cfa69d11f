#include "dio/equation.hpp"

namespace dio {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, Eq, End };

struct Token {
  Tok kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (i_ < s_.size() && (s_[i_] == ' ' || s_[i_] == '\t' || s_[i_] == '\n')) ++i_;
    size_t start = i_;
    if (i_ >= s_.size()) return {Tok::End, "", start};
    char c = s_[i_];
    if (c >= '0' && c <= '9') {
      while (i_ < s_.size() && s_[i_] >= '0' && s_[i_] <= '9') ++i_;
      return {Tok::Int, s_.substr(start, i_ - start), start};
    }
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')) {
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      return {Tok::Ident, s_.substr(start, i_ - start), start};
    }
    ++i_;
    switch (c) {
      case '+': return {Tok::Plus, "+", start};
      case '-': return {Tok::Minus, "-", start};
      case '*': return {Tok::Star, "*", start};
      case '^': return {Tok::Caret, "^", start};
      case '/': return {Tok::Slash, "/", start};
      case '(': return {Tok::LParen, "(", start};
      case ')': return {Tok::RParen, ")", start};
      case '=': return {Tok::Eq, "=", start};
      default: throw parse_error(std::string("unexpected character '") + c + "'", start);
    }
  }

 private:
  const std::string& s_;
  size_t i_ = 0;
};

// Exponents above this would only make the exhaustive desk-scale tools hang.
constexpr unsigned long kMaxExponent = 512;

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) { advance(); }

  MultiPoly parse_expr() {
    MultiPoly acc = parse_term();
    while (cur_.kind == Tok::Plus || cur_.kind == Tok::Minus) {
      bool minus = cur_.kind == Tok::Minus;
      advance();
      MultiPoly rhs = parse_term();
      acc = minus ? acc - rhs : acc + rhs;
    }
    return acc;
  }

  Token current() const { return cur_; }
  void advance() { cur_ = lex_.next(); }

  void expect_end() {
    if (cur_.kind != Tok::End) throw parse_error("unexpected token '" + cur_.text + "'", cur_.pos);
  }

 private:
  MultiPoly parse_term() {
    MultiPoly acc = parse_factor();
    while (cur_.kind == Tok::Star) {
      advance();
      acc = acc * parse_factor();
    }
    return acc;
  }

  MultiPoly parse_factor() {
    if (cur_.kind == Tok::Minus) {
      advance();
      return -parse_factor();
    }
    return parse_power();
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (cur_.kind != Tok::Caret) return base;
    advance();
    if (cur_.kind != Tok::Int)
      throw parse_error("exponent must be a nonnegative integer literal", cur_.pos);
    Integer e(cur_.text);
    if (e > kMaxExponent) throw parse_error("exponent too large", cur_.pos);
    advance();
    return base.pow(e.get_ui());
  }

  MultiPoly parse_atom() {
    if (cur_.kind == Tok::Int) {
      Integer num(cur_.text);
      advance();
      if (cur_.kind == Tok::Slash) {
        advance();
        if (cur_.kind != Tok::Int)
          throw parse_error("fraction literal needs an integer denominator", cur_.pos);
        Integer den(cur_.text);
        if (den == 0) throw parse_error("zero denominator in literal", cur_.pos);
        advance();
        return MultiPoly(Rational(num, den));
      }
      return MultiPoly(Rational(num));
    }
    if (cur_.kind == Tok::Ident) {
      std::string name = cur_.text;
      advance();
      return MultiPoly::variable(name);
    }
    if (cur_.kind == Tok::LParen) {
      advance();
      MultiPoly inner = parse_expr();
      if (cur_.kind != Tok::RParen) throw parse_error("expected ')'", cur_.pos);
      advance();
      return inner;
    }
    throw parse_error("expected a number, variable or '('", cur_.pos);
  }

  Lexer lex_;
  Token cur_{Tok::End, "", 0};
};

}  // namespace

Equation parse_equation(const std::string& text) {
  if (text.find_first_not_of(" \t\n") == std::string::npos)
    throw parse_error("empty input", 0);
  Parser p(text);
  MultiPoly lhs = p.parse_expr();
  if (p.current().kind == Tok::Eq) {
    p.advance();
    MultiPoly rhs = p.parse_expr();
    lhs = lhs - rhs;
  }
  p.expect_end();
  Equation eq;
  eq.lhs = lhs;
  auto vs = lhs.variables();
  eq.variables.assign(vs.begin(), vs.end());
  return eq;
}

MultiPoly parse_polynomial(const std::string& text) {
  if (text.find_first_not_of(" \t\n") == std::string::npos)
    throw parse_error("empty input", 0);
  Parser p(text);
  MultiPoly poly = p.parse_expr();
  p.expect_end();
  return poly;
}

}  // namespace dio
