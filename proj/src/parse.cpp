#include "nashres/parse.hpp"

#include <cctype>

#include "nashres/error.hpp"

namespace nashres {

namespace {

bool valid_identifier(const std::string& s) {
  if (s == "x" || s == "z" || s == "t") return true;
  return s.size() == 2 && (s[0] == 'x' || s[0] == 'z') && s[1] >= '1' && s[1] <= '9';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  MultiPoly parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    MultiPoly p = expr();
    skip_space();
    if (!at_end()) fail("unexpected '" + current_char() + "'");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

  bool at_end() const { return pos_ >= text_.size(); }

  // U+2212 MINUS SIGN, encoded E2 88 92.
  bool at_unicode_minus() const {
    return pos_ + 2 < text_.size() && static_cast<unsigned char>(text_[pos_]) == 0xE2 &&
           static_cast<unsigned char>(text_[pos_ + 1]) == 0x88 &&
           static_cast<unsigned char>(text_[pos_ + 2]) == 0x92;
  }

  std::string current_char() const {
    if (at_end()) return "end of input";
    if (at_unicode_minus()) return "\xE2\x88\x92";
    return std::string(1, text_[pos_]);
  }

  void advance() {
    if (at_unicode_minus()) {
      pos_ += 3;
      ++col_;
      return;
    }
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
  }

  // Returns '+', '-' or 0.
  char peek_sign() {
    skip_space();
    if (at_end()) return 0;
    if (text_[pos_] == '+') return '+';
    if (text_[pos_] == '-' || at_unicode_minus()) return '-';
    return 0;
  }

  bool starts_base() {
    skip_space();
    if (at_end()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  MultiPoly expr() {
    MultiPoly acc;
    char sign = peek_sign();
    if (sign) advance();
    MultiPoly first = term();
    acc = sign == '-' ? -first : first;
    while ((sign = peek_sign())) {
      advance();
      MultiPoly t = term();
      acc = sign == '-' ? acc - t : acc + t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      skip_space();
      if (!at_end() && text_[pos_] == '*') {
        advance();
        acc = acc * factor();
      } else if (starts_base()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly b = base();
    skip_space();
    if (!at_end() && text_[pos_] == '^') {
      advance();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("expected a non-negative integer exponent");
      const Integer n = digits();
      if (n > 1000000) fail("exponent too large");
      b = b.pow(static_cast<std::uint32_t>(n.get_ui()));
    }
    return b;
  }

  Integer digits() {
    std::string s;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s.push_back(text_[pos_]);
      advance();
    }
    return Integer(s);
  }

  MultiPoly base() {
    skip_space();
    if (at_end()) fail("expected a number, variable or '('");
    const char c = text_[pos_];
    if (c == '(') {
      advance();
      MultiPoly inner = expr();
      skip_space();
      if (at_end() || text_[pos_] != ')') fail("expected ')'");
      advance();
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = digits();
      Integer den = 1;
      if (!at_end() && text_[pos_] == '/') {
        advance();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a denominator");
        const std::size_t l = line_, k = col_;
        den = digits();
        if (den == 0) throw ParseError("zero denominator", l, k);
      }
      return MultiPoly::constant(make_rational(num, den));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t l = line_, k = col_;
      std::string name;
      while (!at_end() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        name.push_back(text_[pos_]);
        advance();
      }
      if (!valid_identifier(name)) throw ParseError("unknown identifier '" + name + "'", l, k);
      return MultiPoly::variable(name);
    }
    fail("unexpected '" + current_char() + "'");
  }
};

}  // namespace

MultiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace nashres
