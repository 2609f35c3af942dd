#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtwist/linalg.hpp"
#include "qtwist/scalar.hpp"

namespace qtwist {

/// A word in generator indices (0-based).
using Word = std::vector<std::uint16_t>;

/// Length-lexicographic order on words.
struct WordLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

/// Column of a word of fixed length in the m^d-dimensional tensor power.
inline Column word_column(const Word& w, std::size_t m) {
  Column c = 0;
  for (auto g : w) c = c * m + g;
  return c;
}

inline Word column_word(Column c, std::size_t m, int degree) {
  Word w(static_cast<std::size_t>(degree));
  for (int t = degree - 1; t >= 0; --t) {
    w[static_cast<std::size_t>(t)] = static_cast<std::uint16_t>(c % m);
    c /= m;
  }
  return w;
}

/// Finitely supported noncommutative polynomial in indexed generators.
template <Field F>
class NCPoly {
 public:
  using Terms = std::map<Word, F, WordLess>;

  NCPoly() = default;
  NCPoly(const F& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) t_.emplace(Word{}, c);
  }
  static NCPoly generator(std::size_t g) { return monomial(Word{static_cast<std::uint16_t>(g)}, F(1)); }
  static NCPoly monomial(Word w, const F& c) {
    NCPoly p;
    if (!c.is_zero()) p.t_.emplace(std::move(w), c);
    return p;
  }

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  F coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? F() : it->second;
  }

  void add_term(const Word& w, const F& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(w, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  /// Degree when homogeneous, -1 for zero; throws for mixed degrees.
  int degree() const {
    if (t_.empty()) return -1;
    std::size_t d = t_.begin()->first.size();
    if (t_.rbegin()->first.size() != d) throw DimensionMismatch("polynomial is not homogeneous");
    return static_cast<int>(d);
  }
  bool is_homogeneous() const {
    return t_.empty() || t_.begin()->first.size() == t_.rbegin()->first.size();
  }

  /// Homogeneous components keyed by degree.
  std::map<int, NCPoly> components() const {
    std::map<int, NCPoly> out;
    for (const auto& [w, c] : t_) out[static_cast<int>(w.size())].t_.emplace(w, c);
    return out;
  }

  NCPoly& operator+=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, c);
    return *this;
  }
  NCPoly& operator-=(const NCPoly& o) {
    for (const auto& [w, c] : o.t_) add_term(w, -c);
    return *this;
  }
  friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
  friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
  friend NCPoly operator-(const NCPoly& a) { return a * F(-1); }

  friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
    NCPoly r;
    for (const auto& [wa, ca] : a.t_)
      for (const auto& [wb, cb] : b.t_) r.add_term(concat(wa, wb), ca * cb);
    return r;
  }
  friend NCPoly operator*(const NCPoly& a, const F& s) {
    if (s.is_zero()) return {};
    NCPoly r = a;
    for (auto& [w, c] : r.t_) c = c * s;
    return r;
  }
  friend NCPoly operator*(const F& s, const NCPoly& a) { return a * s; }

  friend bool operator==(const NCPoly&, const NCPoly&) = default;

  /// Algebra homomorphism determined by the images of the generators.
  NCPoly substitute(const std::vector<NCPoly>& images) const {
    NCPoly r;
    for (const auto& [w, c] : t_) {
      NCPoly term(c);
      for (auto g : w) {
        if (g >= images.size()) throw IndexOutOfRange("generator index without an image");
        term = term * images[g];
      }
      r += term;
    }
    return r;
  }

  /// Character value: product of scalar images of the generators.
  F evaluate(const std::vector<F>& values) const {
    F total;
    for (const auto& [w, c] : t_) {
      F term = c;
      for (auto g : w) {
        if (g >= values.size()) throw IndexOutOfRange("generator index without a value");
        term = term * values[g];
        if (term.is_zero()) break;
      }
      total += term;
    }
    return total;
  }

  /// Coefficient vector of a homogeneous polynomial of degree d in an m-letter alphabet.
  SparseVec<F> to_vector(std::size_t m) const {
    std::vector<std::pair<Column, F>> e;
    for (const auto& [w, c] : t_) e.emplace_back(word_column(w, m), c);
    return make_sparse<F>(std::move(e));
  }
  static NCPoly from_vector(const SparseVec<F>& v, std::size_t m, int degree) {
    NCPoly p;
    for (const auto& [c, x] : v) p.t_.emplace(column_word(c, m, degree), x);
    return p;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = decltype(fn(std::declval<const F&>()));
    NCPoly<G> r;
    for (const auto& [w, c] : t_) r.add_term(w, fn(c));
    return r;
  }

 private:
  Terms t_;
};

namespace detail {

/// Coefficient rendering shared by polynomial printers: 1 is omitted, -1 becomes "-",
/// multi-term scalars are parenthesised. Returns (sign is negative, prefix text).
template <Field F>
std::pair<bool, std::string> coefficient_prefix(const F& c, bool has_word) {
  std::string s = to_string(c);
  const bool compound = s.find(' ') != std::string::npos || s.front() == '(';
  const bool neg = !compound && s.front() == '-';
  if (neg) s.erase(0, 1);
  if (!has_word) return {neg, compound ? "(" + s + ")" : s};
  if (!compound && s == "1") return {neg, ""};
  return {neg, (compound ? "(" + s + ")" : s) + "*"};
}

}  // namespace detail

/// Renders `c*x11*x22 - q^-1*x21*x12` style text with the given generator labels.
template <Field F>
std::string format_poly(const NCPoly<F>& p, const std::vector<std::string>& labels,
                        const std::string& separator = "*") {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : p.terms()) {
    auto [neg, prefix] = detail::coefficient_prefix(c, !w.empty());
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    out += prefix;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += separator;
      out += w[i] < labels.size() ? labels[w[i]] : "g" + std::to_string(w[i]);
    }
  }
  return out;
}

/// Element of F⊗F for a graded algebra F: pairs of words with coefficients.
template <Field F>
class TensorPoly {
 public:
  using Key = std::pair<Word, Word>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      WordLess wl;
      if (wl(a.first, b.first)) return true;
      if (wl(b.first, a.first)) return false;
      return wl(a.second, b.second);
    }
  };
  using Terms = std::map<Key, F, KeyLess>;

  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  void add_term(const Word& l, const Word& r, const F& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.try_emplace(Key{l, r}, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  static TensorPoly pure(const NCPoly<F>& a, const NCPoly<F>& b) {
    TensorPoly t;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) t.add_term(wa, wb, ca * cb);
    return t;
  }

  TensorPoly& operator+=(const TensorPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
  }
  TensorPoly& operator-=(const TensorPoly& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
  }
  friend TensorPoly operator+(TensorPoly a, const TensorPoly& b) { return a += b; }
  friend TensorPoly operator-(TensorPoly a, const TensorPoly& b) { return a -= b; }

  /// Componentwise product in F⊗F.
  friend TensorPoly operator*(const TensorPoly& a, const TensorPoly& b) {
    TensorPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_)
        r.add_term(concat(ka.first, kb.first), concat(ka.second, kb.second), ca * cb);
    return r;
  }
  friend TensorPoly operator*(const TensorPoly& a, const F& s) {
    TensorPoly r;
    for (const auto& [k, c] : a.t_) r.add_term(k.first, k.second, c * s);
    return r;
  }

  friend bool operator==(const TensorPoly&, const TensorPoly&) = default;

  /// Applies linear maps on each side.
  template <class LeftFn, class RightFn>
  TensorPoly apply_each(LeftFn&& left, RightFn&& right) const {
    TensorPoly r;
    for (const auto& [k, c] : t_) {
      NCPoly<F> l = left(NCPoly<F>::monomial(k.first, F(1)));
      NCPoly<F> rr = right(NCPoly<F>::monomial(k.second, F(1)));
      r += pure(l, rr) * c;
    }
    return r;
  }

 private:
  Terms t_;
};

template <Field F>
std::string format_tensor(const TensorPoly<F>& t, const std::vector<std::string>& labels) {
  if (t.is_zero()) return "0";
  std::string out;
  bool first = true;
  auto word = [&](const Word& w) {
    if (w.empty()) return std::string("1");
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "*" : "") + labels.at(w[i]);
    return s;
  };
  for (const auto& [k, c] : t.terms()) {
    auto [neg, prefix] = detail::coefficient_prefix(c, true);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    out += prefix + word(k.first) + " ⊗ " + word(k.second);
  }
  return out;
}

}  // namespace qtwist
