#include "ellcy/parse.hpp"

#include <cctype>
#include <stdexcept>

namespace ellcy {

namespace {

class ValueParser {
 public:
  explicit ValueParser(const std::string& s) : s_(s) {}

  QuadElem parse() {
    QuadElem v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::domain_error("parse error at position " + std::to_string(pos_) +
                            " in \"" + s_ + "\": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  QuadElem expr() {
    QuadElem v = term();
    while (true) {
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  QuadElem term() {
    QuadElem v = factor();
    while (true) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        QuadElem w = factor();
        if (w.is_zero()) fail("division by zero");
        v /= w;
      } else {
        return v;
      }
    }
  }

  QuadElem factor() {
    if (eat('-')) return -factor();
    if (eat('+')) return factor();
    char c = peek();
    if (c == '(') {
      eat('(');
      QuadElem v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
        word += s_[pos_++];
      if (word != "sqrt") fail("unknown identifier '" + word + "'");
      if (!eat('(')) fail("expected '(' after sqrt");
      QuadElem arg = expr();
      if (!eat(')')) fail("expected ')'");
      auto r = as_rational(arg);
      if (!r) fail("nested sqrt");
      auto [s, core] = rat_sqrt_decompose(*r);
      return core == 1 ? QuadElem(s) : QuadElem(Rat(0), s, core);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      skip_ws();
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        digits += s_[pos_++];
      return QuadElem(Rat(Int(digits)));
    }
    fail("expected a value");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

QuadElem parse_value(const std::string& text) { return ValueParser(text).parse(); }

Rat parse_rational(const std::string& text) {
  QuadElem v = parse_value(text);
  auto r = as_rational(v);
  if (!r) throw std::domain_error("expected a rational value, got " + to_string(v));
  return *r;
}

}  // namespace ellcy
