#include <cctype>

#include "birkit/errors.hpp"
#include "birkit/poly.hpp"

// Grammar (whitespace insignificant, ^ binds tighter than *, * tighter
// than + and -, unary minus allowed):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ['^' INT]
//   base   := INT | IDENT | '(' expr ')' | '-' base
//   IDENT  := [a-zA-Z][a-zA-Z0-9_]*

namespace birkit {

namespace {

class Parser {
 public:
  Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

  Poly run() {
    Poly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorKind::Syntax,
                "syntax error at position " + std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) { ++pos_; return true; }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = eat('-');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly b = base();
    if (eat('^')) {
      long e = integer("exponent");
      if (e < 0) fail("negative exponent");
      Poly acc = Poly::constant(ring_, Coeff(1));
      for (long i = 0; i < e; ++i) acc = acc * b;
      return acc;
    }
    return b;
  }

  long integer(const char* what) {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail(std::string("expected ") + what);
    return std::stol(text_.substr(start, pos_ - start));
  }

  Poly base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '-') { ++pos_; return -base(); }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() && isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class v(text_.substr(start, pos_ - start));
      return Poly::constant(ring_, Coeff(v));
    }
    if (isalpha(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      int idx = ring_->var_index(name);
      if (idx < 0)
        throw Error(ErrorKind::UnknownVariable,
                    "unknown variable '" + name + "' at position " + std::to_string(start + 1));
      return Poly::variable(ring_, idx);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& text_;
  RingPtr ring_;
  size_t pos_ = 0;
};

}  // namespace

Poly poly_parse(const std::string& text, const RingPtr& ring) {
  return Parser(text, ring).run();
}

}  // namespace birkit
