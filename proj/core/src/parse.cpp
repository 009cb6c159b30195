#include "cforge/parse.hpp"

#include <cctype>

namespace cforge::sym {

namespace {

class Parser {
 public:
  Parser(std::string_view text, VarTablePtr table)
      : text_(text), tab_(std::move(table)) {}

  Expr run() {
    Expr e = expression();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

 private:
  std::string_view text_;
  VarTablePtr tab_;
  size_t pos_ = 0;

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Expr expression() {
    Expr e = term();
    for (;;) {
      if (eat('+')) {
        e = e + term();
      } else if (eat('-')) {
        e = e - term();
      } else {
        return e;
      }
    }
  }

  Expr term() {
    Expr e = factor();
    for (;;) {
      skip_ws();
      size_t op_pos = pos_;
      if (eat('*')) {
        e = e * factor();
      } else if (eat('/')) {
        Expr d = factor();
        if (d.is_zero()) throw ParseError("division by literal zero", op_pos);
        e = e / d;
      } else {
        return e;
      }
    }
  }

  Expr factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    Expr base = atom();
    skip_ws();
    if (eat('^')) {
      size_t exp_pos = pos_;
      long e = exponent();
      if (e < 0 && base.is_zero())
        throw ParseError("zero raised to a negative power", exp_pos);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  long exponent() {
    skip_ws();
    bool parenthesized = eat('(');
    skip_ws();
    bool negative = eat('-');
    skip_ws();
    size_t start = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", pos_);
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 4096) throw ParseError("exponent too large", start);
      ++pos_;
    }
    if (pos_ < text_.size() && text_[pos_] == '.')
      throw ParseError("exponent must be an integer", pos_);
    if (parenthesized && !eat(')'))
      throw ParseError("expected ')'", pos_);
    return negative ? -value : value;
  }

  Expr atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expression();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return name();
    throw ParseError("expected a number, variable, or '('", pos_);
  }

  Expr number() {
    size_t start = pos_;
    Int value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
    }
    Int den = 1;
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        throw ParseError("expected digits after decimal point", pos_);
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = value * 10 + (text_[pos_] - '0');
        den *= 10;
        ++pos_;
      }
    }
    (void)start;
    return Expr::rational(tab_, value, den);
  }

  Expr name() {
    size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    auto idx = tab_->find(id);
    if (!idx) throw ParseError("unknown variable name '" + id + "'", start);
    return Expr::variable(tab_, *idx);
  }
};

}  // namespace

Expr parse_expr(std::string_view text, VarTablePtr table) {
  return Parser(text, std::move(table)).run();
}

}  // namespace cforge::sym
