#include "axial/scalar_parser.hpp"

#include <cctype>

#include "axial/errors.hpp"

namespace axial {

namespace {

constexpr unsigned kMaxExponent = 64;

class Parser {
 public:
  Parser(const std::string& text, const FieldPtr& field) : s_(text), f_(field) {}

  FieldElement run() {
    FieldElement v = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::SyntaxError, what + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (accept('+')) {
        v = v + term();
      } else if (accept('-')) {
        v = v - term();
      } else {
        return v;
      }
    }
  }

  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (accept('*')) {
        v = v * factor();
      } else if (accept('/')) {
        FieldElement d = factor();
        if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "denominator evaluates to 0 in \"" + s_ + "\"");
        v = v / d;
      } else {
        return v;
      }
    }
  }

  FieldElement factor() {
    if (accept('-')) return -factor();
    FieldElement base = primary();
    if (accept('^')) {
      skip_ws();
      std::string digits = read_digits();
      if (digits.empty()) fail("exponent must be a nonnegative integer");
      if (digits.size() > 2 || std::stoul(digits) > kMaxExponent) fail("exponent exceeds 64");
      return base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  std::string read_digits() {
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return s_.substr(start, pos_ - start);
  }

  FieldElement primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElement v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return FieldElement::from_integer(f_, mpz_class(read_digits()));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name = s_.substr(start, pos_ - start);
      if (f_->has_variable() && name == f_->variable()) return FieldElement::generator(f_);
      throw Error(ErrorKind::UnknownSymbol, "'" + name + "' is not a variable of " + f_->spec());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  FieldPtr f_;
  size_t pos_ = 0;
};

}  // namespace

FieldElement parse_scalar(const std::string& text, const FieldPtr& field) { return Parser(text, field).run(); }

}  // namespace axial
