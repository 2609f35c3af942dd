#pragma once

#include <cctype>
#include <concepts>
#include <map>
#include <string>
#include <string_view>

#include "qtwist/ratfunc.hpp"
#include "qtwist/rational.hpp"

namespace qtwist {

/// Exact coefficient field accepted by every template in the library.
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { a / b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inverse() } -> std::convertible_to<F>;
  F(1);
};

namespace detail {

using Laurent = std::map<int, Rational>;  // exponent -> coefficient

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view s) : s_(s) {}

  /// Returns (numerator, denominator) as Laurent polynomials.
  std::pair<Laurent, Laurent> parse_top() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      Laurent num = parse_expr();
      expect(')');
      skip_ws();
      if (at_end()) return {num, Laurent{{0, Rational(1)}}};
      expect('/');
      expect('(');
      Laurent den = parse_expr();
      expect(')');
      skip_ws();
      if (!at_end()) fail("trailing characters");
      return {num, den};
    }
    Laurent e = parse_expr();
    skip_ws();
    if (!at_end()) fail("trailing characters");
    return {e, Laurent{{0, Rational(1)}}};
  }

 private:
  Laurent parse_expr() {
    Laurent out;
    skip_ws();
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    add_term(out, sign);
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      add_term(out, c == '-' ? -1 : 1);
    }
    return out;
  }

  void add_term(Laurent& out, int sign) {
    skip_ws();
    Rational coeff(1);
    int exponent = 0;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_coeff();
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        exponent = parse_qpow();
      }
    } else if (peek() == 'q') {
      exponent = parse_qpow();
    } else {
      fail("expected a term");
    }
    if (sign < 0) coeff = -coeff;
    Rational& slot = out[exponent];
    slot += coeff;
    if (slot.is_zero()) out.erase(exponent);
  }

  Rational parse_coeff() {
    std::string text = digits();
    skip_ws();
    if (peek() == '/') {
      std::size_t save = pos_;
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) {
        pos_ = save;  // belongs to an enclosing quotient
        return Rational::parse(text);
      }
      text += "/" + digits();
    }
    return Rational::parse(text);
  }

  int parse_qpow() {
    expect('q');
    skip_ws();
    if (peek() != '^') return 1;
    ++pos_;
    skip_ws();
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    std::string d = digits();
    if (d.size() > 6) fail("exponent too large");
    int e = std::stoi(d);
    return neg ? -e : e;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void expect(char c) {
    skip_ws();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("scalar '" + std::string(s_) + "': " + what + " at offset " +
                     std::to_string(pos_));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline RatFunc laurent_to_ratfunc(const Laurent& l) {
  if (l.empty()) return RatFunc();
  int low = l.begin()->first;
  int shift = low < 0 ? -low : 0;
  std::vector<Rational> c(static_cast<std::size_t>(l.rbegin()->first + shift) + 1);
  for (const auto& [e, v] : l) c[static_cast<std::size_t>(e + shift)] = v;
  return RatFunc(Polynomial(std::move(c)), Polynomial::monomial(Rational(1), shift));
}

/// Prints sum of c_e q^e in descending exponent order.
inline std::string format_laurent(const Laurent& l) {
  if (l.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = l.rbegin(); it != l.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    first = false;
    std::string qpart = e == 1 ? "q" : "q^" + std::to_string(e);
    if (e == 0)
      out += mag.to_string();
    else if (mag.is_one())
      out += qpart;
    else
      out += mag.to_string() + "*" + qpart;
  }
  return out;
}

inline Laurent poly_terms(const Polynomial& p, int shift) {
  Laurent l;
  for (int i = 0; i <= p.degree(); ++i)
    if (!p.coeffs()[i].is_zero()) l[i - shift] = p.coeffs()[i];
  return l;
}

}  // namespace detail

inline std::string to_string(const Rational& r) { return r.to_string(); }

inline std::string to_string(const RatFunc& f) {
  const Polynomial& d = f.denominator();
  if (d.is_monomial()) return detail::format_laurent(detail::poly_terms(f.numerator(), d.degree()));
  return "(" + detail::format_laurent(detail::poly_terms(f.numerator(), 0)) + ")/(" +
         detail::format_laurent(detail::poly_terms(d, 0)) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << to_string(f); }

/// Parses a scalar in the textual grammar. For Rational the expression must be free of q.
template <class F>
F parse_scalar(std::string_view text);

template <>
inline RatFunc parse_scalar<RatFunc>(std::string_view text) {
  auto [num, den] = detail::ScalarParser(text).parse_top();
  RatFunc d = detail::laurent_to_ratfunc(den);
  if (d.is_zero()) throw ParseError("scalar '" + std::string(text) + "': zero denominator");
  return detail::laurent_to_ratfunc(num) / d;
}

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  RatFunc f = parse_scalar<RatFunc>(text);
  if (!f.is_constant())
    throw ParseError("scalar '" + std::string(text) + "': q is not allowed over the rationals");
  return f.constant_value();
}

/// Embeds a rational constant into F.
template <Field F>
F from_rational(const Rational& r) {
  return F(r);
}

/// The deformation parameter as an element of F: symbolic q for RatFunc, q0 for Rational.
template <Field F>
F q_value(const Rational& q0);

template <>
inline RatFunc q_value<RatFunc>(const Rational&) {
  return RatFunc::q();
}
template <>
inline Rational q_value<Rational>(const Rational& q0) {
  return q0;
}

inline Rational specialize(const Rational& r, const Rational&) { return r; }

template <Field F>
F power(const F& base, long e) {
  return pow(base, e);
}

}  // namespace qtwist
