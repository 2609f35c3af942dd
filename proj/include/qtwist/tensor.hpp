/**
 * @file tensor.hpp
 * Endomorphisms of V⊗V and V⊗V⊗V with dim V = n ≤ 8.
 *
 * Index convention (used by every other header): R^{ij}_{kl} is the coefficient of
 * x_i⊗x_j in R(x_k⊗x_l). Upper indices are outputs, lower are inputs. Public
 * accessors take 1-based indices.
 */
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "qtwist/scalar.hpp"

namespace qtwist {

inline constexpr int kMaxDim = 8;

namespace detail {
inline void check_dim(int n) {
  if (n < 1 || n > kMaxDim)
    throw IndexOutOfRange("dimension n = " + std::to_string(n) + " outside 1.." +
                          std::to_string(kMaxDim));
}
inline void check_index(int n, int i) {
  if (i < 1 || i > n)
    throw IndexOutOfRange("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
}
}  // namespace detail

/// Sparse tensor over an arbitrary number of legs; keys pack 3 bits per 0-based index.
template <Field F, int Legs>
class PackedTensor {
 public:
  static constexpr int kIndices = 2 * Legs;
  using Key = std::uint32_t;
  using Indices = std::array<int, kIndices>;  // 1-based: outputs then inputs

  PackedTensor() = default;
  explicit PackedTensor(int n) : n_(n) { detail::check_dim(n); }

  int n() const { return n_; }
  const std::map<Key, F>& entries() const { return c_; }
  std::size_t nonzero_count() const { return c_.size(); }
  bool is_zero() const { return c_.empty(); }

  static Key pack(const Indices& idx) {
    Key k = 0;
    for (int t = 0; t < kIndices; ++t) k = (k << 3) | static_cast<Key>(idx[t] - 1);
    return k;
  }
  static Indices unpack(Key k) {
    Indices idx{};
    for (int t = kIndices - 1; t >= 0; --t) {
      idx[t] = static_cast<int>(k & 7u) + 1;
      k >>= 3;
    }
    return idx;
  }
  static Key output_part(Key k) { return k >> (3 * Legs); }
  static Key input_part(Key k) { return k & ((Key(1) << (3 * Legs)) - 1); }
  static Key join(Key out, Key in) { return (out << (3 * Legs)) | in; }

  F get(const Indices& idx) const {
    for (int i : idx) detail::check_index(n_, i);
    auto it = c_.find(pack(idx));
    return it == c_.end() ? F() : it->second;
  }
  void set(const Indices& idx, const F& v) {
    for (int i : idx) detail::check_index(n_, i);
    set_packed(pack(idx), v);
  }
  void add(const Indices& idx, const F& v) {
    for (int i : idx) detail::check_index(n_, i);
    add_packed(pack(idx), v);
  }
  void set_packed(Key k, const F& v) {
    if (v.is_zero())
      c_.erase(k);
    else
      c_[k] = v;
  }
  void add_packed(Key k, const F& v) {
    if (v.is_zero()) return;
    auto [it, fresh] = c_.try_emplace(k, v);
    if (!fresh) {
      it->second += v;
      if (it->second.is_zero()) c_.erase(it);
    }
  }

  friend bool operator==(const PackedTensor& a, const PackedTensor& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

  friend PackedTensor operator-(const PackedTensor& a, const PackedTensor& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("tensor dimensions differ");
    PackedTensor r = a;
    for (const auto& [k, v] : b.c_) r.add_packed(k, -v);
    return r;
  }

  /// Composition (a∘b)(x) = a(b(x)).
  friend PackedTensor compose(const PackedTensor& a, const PackedTensor& b) {
    if (a.n_ != b.n_) throw DimensionMismatch("tensor dimensions differ");
    std::unordered_map<Key, std::vector<std::pair<Key, const F*>>> a_by_input;
    for (const auto& [k, v] : a.c_) a_by_input[input_part(k)].emplace_back(output_part(k), &v);
    PackedTensor r(a.n_);
    for (const auto& [k, v] : b.c_) {
      auto it = a_by_input.find(output_part(k));
      if (it == a_by_input.end()) continue;
      Key in = input_part(k);
      for (const auto& [out, av] : it->second) r.add_packed(join(out, in), *av * v);
    }
    return r;
  }

  /// Coefficients of the image of a basis tensor, as (output indices, value).
  std::vector<std::pair<std::array<int, Legs>, F>> apply(const std::array<int, Legs>& input) const {
    for (int i : input) detail::check_index(n_, i);
    Key in = 0;
    for (int i : input) in = (in << 3) | static_cast<Key>(i - 1);
    std::vector<std::pair<std::array<int, Legs>, F>> out;
    for (const auto& [k, v] : c_) {
      if (input_part(k) != in) continue;
      Indices idx = unpack(k);
      std::array<int, Legs> o{};
      for (int t = 0; t < Legs; ++t) o[t] = idx[t];
      out.emplace_back(o, v);
    }
    return out;
  }

  static PackedTensor identity(int n) {
    PackedTensor r(n);
    const Key total = Key(1) << (3 * Legs);
    for (Key in = 0; in < total; ++in) {
      bool ok = true;
      for (int t = 0; t < Legs; ++t)
        if (((in >> (3 * t)) & 7u) >= static_cast<Key>(n)) ok = false;
      if (ok) r.c_.emplace(join(in, in), F(1));
    }
    return r;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using G = decltype(fn(std::declval<const F&>()));
    PackedTensor<G, Legs> r(n_);
    for (const auto& [k, v] : c_) r.set_packed(k, fn(v));
    return r;
  }

 private:
  int n_ = 2;
  std::map<Key, F> c_;
};

template <Field F>
using EndTensor = PackedTensor<F, 2>;
template <Field F>
using EndTensor3 = PackedTensor<F, 3>;

/// The flip x⊗y ↦ y⊗x.
template <Field F>
EndTensor<F> flip(int n) {
  EndTensor<F> r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r.set({j, i, i, j}, F(1));
  return r;
}

enum class Legs { L12, L13, L23 };

/// Embeds R into End(V⊗3) acting on the chosen pair of legs.
template <Field F>
EndTensor3<F> place(const EndTensor<F>& R, Legs legs) {
  const int n = R.n();
  EndTensor3<F> r(n);
  for (const auto& [k, v] : R.entries()) {
    auto [a, b, c, d] = EndTensor<F>::unpack(k);
    for (int e = 1; e <= n; ++e) {
      switch (legs) {
        case Legs::L12: r.set({a, b, e, c, d, e}, v); break;
        case Legs::L13: r.set({a, e, b, c, e, d}, v); break;
        case Legs::L23: r.set({e, a, b, e, c, d}, v); break;
      }
    }
  }
  return r;
}

template <Field F>
EndTensor3<F> compose3(const EndTensor3<F>& a, const EndTensor3<F>& b) {
  return compose(a, b);
}

/// R¹²R¹³R²³ − R²³R¹³R¹²; zero exactly for solutions of the QYBE.
template <Field F>
EndTensor3<F> qybe_residual(const EndTensor<F>& R) {
  EndTensor3<F> r12 = place(R, Legs::L12), r13 = place(R, Legs::L13), r23 = place(R, Legs::L23);
  EndTensor3<F> lhs = compose(compose(r12, r13), r23);
  EndTensor3<F> rhs = compose(compose(r23, r13), r12);
  return lhs - rhs;
}

template <Field F>
bool is_qybe_solution(const EndTensor<F>& R) {
  return qybe_residual(R).is_zero();
}

/// Nonzero coefficients of R(x_k⊗x_l) as (i, j, R^{ij}_{kl}), sorted by (i, j).
template <Field F>
std::vector<std::tuple<int, int, F>> act(const EndTensor<F>& R, int k, int l) {
  std::vector<std::tuple<int, int, F>> out;
  for (auto& [o, v] : R.apply({k, l})) out.emplace_back(o[0], o[1], v);
  return out;
}

}  // namespace qtwist
