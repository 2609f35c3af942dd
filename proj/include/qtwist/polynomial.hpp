#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "qtwist/rational.hpp"

namespace qtwist {

/// Dense univariate polynomial in q over the rationals; coefficient i multiplies q^i.
/// The coefficient vector never ends in a zero, so the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(const Rational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(const Rational& c, int exponent) {
    std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
    v.back() = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Rational(0);
  }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }
  Rational constant_term() const { return coeff(0); }

  bool is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

  /// True for c*q^k; used to print Laurent polynomials without a quotient.
  bool is_monomial() const {
    if (is_zero()) return false;
    for (int i = 0; i < degree(); ++i)
      if (!coeffs_[i].is_zero()) return false;
    return true;
  }

  /// Lowest exponent with a nonzero coefficient.
  int valuation() const {
    for (int i = 0; i <= degree(); ++i)
      if (!coeffs_[i].is_zero()) return i;
    return 0;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        if (!b.coeffs_[j].is_zero()) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    Polynomial r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
  }

  /// Multiplies by q^k for k >= 0.
  Polynomial shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(static_cast<std::size_t>(k));
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// Euclidean division; returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.degree() < b.degree()) return {Polynomial(), a};
    std::vector<Rational> rem = a.coeffs_;
    std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational lead_inv = b.leading().inverse();
    for (int i = a.degree(); i >= b.degree(); --i) {
      if (rem[i].is_zero()) continue;
      Rational f = rem[i] * lead_inv;
      quot[i - b.degree()] = f;
      for (int j = 0; j <= b.degree(); ++j) rem[i - b.degree() + j] -= f * b.coeffs_[j];
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(leading().inverse());
  }

  /// Monic greatest common divisor; gcd(0, 0) = 0.
  static Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
      Polynomial r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  Rational evaluate(const Rational& x) const {
    Rational acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + coeffs_[i];
    return acc;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

}  // namespace qtwist
