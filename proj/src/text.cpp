#include "fqt/text.hpp"

#include <cctype>
#include <cstdint>

#include "fqt/error.hpp"

namespace fqt {
namespace {

std::size_t term_count(const Poly& f) {
  std::size_t n = 0;
  for (Fq c : f.coeffs()) n += c.code != 0;
  return n;
}

// expr    := ['-'] product (('+' | '-') product)*
// product := power (('*' | '/') power)*
// power   := atom ['^' integer]
// atom    := integer | 't' | '(' expr ')'
// Integer literals are element codes 0..q-1. '/' is only accepted for
// rational functions.
class Parser {
 public:
  Parser(const FieldCtx& field, std::string_view text, bool allow_division)
      : field_(field), text_(text), allow_division_(allow_division) {}

  RatFunc parse() {
    if (peek() == '\0') fail("empty input");
    RatFunc x = expr();
    if (peek() != '\0') fail(std::string("unexpected '") + text_[pos_] + "'");
    return x;
  }

 private:
  char peek() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

  RatFunc expr() {
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    }
    RatFunc acc = product();
    if (negate) acc = -acc;
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      RatFunc rhs = product();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  RatFunc product() {
    RatFunc acc = power();
    for (char c = peek(); c == '*' || c == '/'; c = peek()) {
      if (c == '/' && !allow_division_) fail("division in a polynomial");
      ++pos_;
      RatFunc rhs = power();
      acc = c == '*' ? acc * rhs : acc / rhs;
    }
    return acc;
  }

  RatFunc power() {
    RatFunc base = atom();
    if (peek() != '^') return base;
    ++pos_;
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
    const std::size_t start = pos_;
    std::uint64_t exponent = integer();
    if (exponent > 100000) {
      pos_ = start;
      fail("exponent too large");
    }
    return pow(base, static_cast<std::int64_t>(exponent));
  }

  RatFunc atom() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RatFunc::constant(field_, integer_coeff());
    }
    if (c == 't') {
      ++pos_;
      return RatFunc(Poly::t(field_));
    }
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("expected coefficient or 't'");
  }

  std::uint64_t integer() {
    std::uint64_t value = 0;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (1ull << 40)) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    return value;
  }

  Fq integer_coeff() {
    const std::size_t start = pos_;
    const std::uint64_t value = integer();
    if (value >= field_.q()) {
      pos_ = start;
      fail("coefficient " + std::to_string(value) + " out of range 0.." +
           std::to_string(field_.q() - 1));
    }
    return Fq{static_cast<std::uint32_t>(value)};
  }

  const FieldCtx& field_;
  std::string_view text_;
  bool allow_division_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string format(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    const Fq c = f.coeff(i);
    if (c.code == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c.code);
      continue;
    }
    if (c.code != 1) out += std::to_string(c.code) + "*";
    out += 't';
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

std::string format(const RatFunc& x) {
  if (x.is_polynomial()) return format(x.num());
  auto side = [](const Poly& f) {
    return term_count(f) > 1 ? "(" + format(f) + ")" : format(f);
  };
  return side(x.num()) + "/" + side(x.den());
}

Poly parse_poly(const FieldCtx& field, std::string_view text) {
  return Parser(field, text, false).parse().num();
}

RatFunc parse_ratfunc(const FieldCtx& field, std::string_view text) {
  return Parser(field, text, true).parse();
}

}  // namespace fqt
