#pragma once

// Plain-text operator literals:
//   term   := [coef] factor*        coef := int | int/int
//   factor := (x1|x2|d1|d2) ['^' int]   (an optional '*' may separate items)
//   expr   := ['-'|'+'] term (('+'|'-') term)*
// Printing uses the canonical lexicographic order on (i1, i2, k1, k2) and
// parse(print(P)) == P.

#include "godeaux/pdo_algebra.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace godeaux::pdo {

struct ParseError : std::invalid_argument {
  ParseError(const std::string& what, std::size_t pos)
      : std::invalid_argument(what + " at offset " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

namespace detail {

class OperatorParser {
 public:
  explicit OperatorParser(std::string_view text) : s_(text) {}

  TruncatedOperator parse(int precision, int d_bound) {
    TruncatedOperator out(precision, d_bound);
    skip_ws();
    if (at_end()) throw ParseError("empty operator literal", pos_);
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      auto [m, c] = parse_term();
      out.add_term(m, sign * c);
      first = false;
      skip_ws();
    }
    return out;
  }

 private:
  std::pair<Monomial, Rational> parse_term() {
    Rational coef(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      BigInt num = parse_uint();
      BigInt den = 1;
      if (peek() == '/') {
        get();
        den = parse_uint();
        if (den == 0) throw ParseError("zero denominator", pos_);
      }
      coef = Rational(num, den);
      any = true;
    }
    Monomial m;
    for (;;) {
      skip_ws();
      if (peek() == '*' && any) {
        get();
        skip_ws();
      }
      const char c = peek();
      if (c != 'x' && c != 'd') break;
      const std::size_t start = pos_;
      get();
      const char idx = get();
      if (idx != '1' && idx != '2') throw ParseError("expected variable x1, x2, d1 or d2", start);
      int e = 1;
      skip_ws();
      if (peek() == '^') {
        get();
        skip_ws();
        e = static_cast<int>(parse_uint());
      }
      int& slot = c == 'x' ? (idx == '1' ? m.i1 : m.i2) : (idx == '1' ? m.k1 : m.k2);
      slot += e;
      any = true;
    }
    if (!any) throw ParseError("expected a coefficient or a variable", pos_);
    return {m, coef};
  }

  BigInt parse_uint() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected digits", pos_);
    BigInt v = 0;
    std::size_t digits = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (get() - '0');
      ++digits;
    }
    if (digits > 64) throw ParseError("number too long", pos_);
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return at_end() ? '\0' : s_[pos_++]; }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline TruncatedOperator parse_operator(std::string_view text, int precision = 12, int d_bound = 6) {
  return detail::OperatorParser(text).parse(precision, d_bound);
}

inline std::string to_string(const TruncatedOperator& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;

    std::string factors;
    auto put = [&factors](const char* name, int e) {
      if (e == 0) return;
      if (!factors.empty()) factors += ' ';
      factors += name;
      if (e > 1) factors += "^" + std::to_string(e);
    };
    put("x1", m.i1);
    put("x2", m.i2);
    put("d1", m.k1);
    put("d2", m.k2);

    if (factors.empty())
      os << godeaux::to_string(mag);
    else if (mag == 1)
      os << factors;
    else
      os << godeaux::to_string(mag) << ' ' << factors;
  }
  return os.str();
}

}  // namespace godeaux::pdo
