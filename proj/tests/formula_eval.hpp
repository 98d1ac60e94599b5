#pragma once

// Independent evaluator for the bound formula strings. Deliberately shares no
// code with the library's formula emission: a recursive descent parser over
// the grammar (integers, q, gb(a,b), ^, *, +, -, max(x,y)).

#include <cctype>
#include <stdexcept>
#include <string>

#include "qlat/qbinom.hpp"

namespace formula {

class Parser {
 public:
  Parser(const std::string& text, unsigned q) : s_(text), q_(q) {}

  qlat::BigNat parse() {
    qlat::BigNat v = expr();
    skip_ws();
    if (pos_ != s_.size()) throw std::runtime_error("trailing input");
    return v;
  }

 private:
  qlat::BigNat expr() {
    qlat::BigNat v = term();
    for (;;) {
      skip_ws();
      if (eat('+'))
        v += term();
      else if (eat('-'))
        v -= term();
      else
        return v;
    }
  }

  qlat::BigNat term() {
    qlat::BigNat v = factor();
    for (;;) {
      skip_ws();
      if (eat('*'))
        v *= factor();
      else
        return v;
    }
  }

  qlat::BigNat factor() {
    qlat::BigNat base = atom();
    skip_ws();
    if (eat('^')) {
      qlat::BigNat e = atom();
      qlat::BigNat v = 1;
      for (qlat::BigNat i = 0; i < e; ++i) v *= base;
      return v;
    }
    return base;
  }

  qlat::BigNat atom() {
    skip_ws();
    if (eat('(')) {
      qlat::BigNat v = expr();
      expect(')');
      return v;
    }
    if (std::isdigit(peek())) {
      std::string num;
      while (std::isdigit(peek())) num += s_[pos_++];
      return qlat::BigNat(num);
    }
    std::string id;
    while (std::isalpha(peek())) id += s_[pos_++];
    if (id == "q") return q_;
    if (id == "gb") {
      expect('(');
      qlat::BigNat a = expr();
      expect(',');
      qlat::BigNat b = expr();
      expect(')');
      return qlat::gaussian_binomial(a.convert_to<long long>(),
                                     b.convert_to<long long>(), q_);
    }
    if (id == "max") {
      expect('(');
      qlat::BigNat a = expr();
      expect(',');
      qlat::BigNat b = expr();
      expect(')');
      return a > b ? a : b;
    }
    throw std::runtime_error("unexpected token at " + std::to_string(pos_));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    skip_ws();
    if (!eat(c)) throw std::runtime_error(std::string("expected ") + c);
  }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace((unsigned char)s_[pos_])) ++pos_;
  }

  std::string s_;
  unsigned q_;
  std::size_t pos_ = 0;
};

inline qlat::BigNat eval(const std::string& text, unsigned q) {
  return Parser(text, q).parse();
}

}  // namespace formula
