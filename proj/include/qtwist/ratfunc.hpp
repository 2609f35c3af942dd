#pragma once

#include <string>
#include <utility>

#include "qtwist/polynomial.hpp"

namespace qtwist {

/// Element of the rational function field Q(q).
///
/// Stored as numerator/denominator with gcd 1 and a monic denominator, so two
/// values are equal exactly when their stored polynomials agree.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(int c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  /// The indeterminate q.
  static RatFunc q() { return RatFunc(Polynomial::monomial(Rational(1), 1), Polynomial(Rational(1))); }

  /// c * q^k for any integer k.
  static RatFunc laurent_monomial(const Rational& c, int k) {
    if (k >= 0) return RatFunc(Polynomial::monomial(c, k), Polynomial(Rational(1)));
    return RatFunc(Polynomial(c), Polynomial::monomial(Rational(1), -k));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_.degree() == 0 && num_.leading().is_one(); }
  bool is_constant() const { return den_.degree() == 0 && num_.is_constant(); }
  Rational constant_value() const { return num_.constant_term(); }

  RatFunc inverse() const {
    if (is_zero()) throw DivisionByZero();
    RatFunc r;
    r.num_ = den_;
    r.den_ = num_;
    r.make_monic();
    return r;
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) {
      if (a.den_.degree() == 0) return raw(a.num_ + b.num_, a.den_);
      return RatFunc(a.num_ + b.num_, a.den_);
    }
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a) { return raw(-a.num_, a.den_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    if (a.den_.degree() == 0 && b.den_.degree() == 0) return raw(a.num_ * b.num_, a.den_);
    // Cross-cancel; the result is then already reduced.
    Polynomial g1 = Polynomial::gcd(a.num_, b.den_);
    Polynomial g2 = Polynomial::gcd(b.num_, a.den_);
    Polynomial an = Polynomial::divmod(a.num_, g1).first, bd = Polynomial::divmod(b.den_, g1).first;
    Polynomial bn = Polynomial::divmod(b.num_, g2).first, ad = Polynomial::divmod(a.den_, g2).first;
    RatFunc r;
    r.num_ = an * bn;
    r.den_ = ad * bd;
    r.make_monic();
    return r;
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Evaluation at a rational point.
  Rational evaluate(const Rational& q0) const {
    Rational d = den_.evaluate(q0);
    if (d.is_zero()) throw PoleAtPoint(q0.to_string());
    return num_.evaluate(q0) / d;
  }

 private:
  static RatFunc raw(Polynomial num, Polynomial den) {
    RatFunc r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    if (r.num_.is_zero()) r.den_ = Polynomial(Rational(1));
    return r;
  }

  void make_monic() {
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    if (!den_.is_monic()) {
      Rational inv = den_.leading().inverse();
      num_ = num_.scaled(inv);
      den_ = den_.scaled(inv);
    }
  }

  void normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
      den_ = Polynomial(Rational(1));
      return;
    }
    if (den_.degree() > 0) {
      Polynomial g = Polynomial::gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
      }
    }
    make_monic();
  }

  Polynomial num_;
  Polynomial den_;
};

/// Evaluation homomorphism Q(q) -> Q at q = q0.
inline Rational specialize(const RatFunc& f, const Rational& q0) { return f.evaluate(q0); }

inline RatFunc pow(const RatFunc& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  RatFunc result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace qtwist
