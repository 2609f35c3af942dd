/**
 * @file frt.hpp
 * FRT bialgebras A(R), the quantum matrix algebra O_q(M_n), the q-determinant and
 * the Manin end construction A!•A.
 *
 * Generator t^i_j (row i, column j, written x_ij in O_q(M_n)) has 0-based index
 * (i-1)*n + (j-1). The relations encode R T1 T2 = T2 T1 R with T_ij = t^j_i; see
 * kFrtConvention below.
 */
#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "qtwist/quadratic.hpp"
#include "qtwist/tensor.hpp"

namespace qtwist {

/// Relations R T1 T2 = T2 T1 R for the matrix T with entries T_ij = t^j_i:
///   Σ_ab R^{ij}_{ab} t^k_a t^l_b = Σ_ab R^{ab}_{kl} t^b_j t^a_i.
inline constexpr const char* kFrtConvention = "R T1 T2 = T2 T1 R, T_ij = t^j_i";

/// 0-based generator index of t^i_j for 1-based i, j.
inline std::size_t tgen(int n, int i, int j) {
  return static_cast<std::size_t>((i - 1) * n + (j - 1));
}

inline std::vector<std::string> matrix_labels(int n, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(stem + std::to_string(i) + std::to_string(j));
  return out;
}

inline std::vector<std::string> frt_labels(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) out.push_back("t^" + std::to_string(i) + "_" + std::to_string(j));
  return out;
}

/// Matrix coalgebra on generators x_{rc} (index r*n + c).
/// Standard: Δ(x_rc) = Σ_k x_rk ⊗ x_kc. Opposite: Δ(x_rc) = Σ_k x_kc ⊗ x_rk.
struct MatrixCoalgebra {
  int n = 2;
  bool opposite = false;

  template <Field F>
  TensorPoly<F> comultiply_generator(std::size_t g) const {
    const int r = static_cast<int>(g) / n, c = static_cast<int>(g) % n;
    TensorPoly<F> t;
    for (int k = 0; k < n; ++k) {
      auto a = static_cast<std::uint16_t>(r * n + k), b = static_cast<std::uint16_t>(k * n + c);
      if (opposite)
        t.add_term(Word{b}, Word{a}, F(1));
      else
        t.add_term(Word{a}, Word{b}, F(1));
    }
    return t;
  }

  /// Multiplicative extension of the generator rule.
  template <Field F>
  TensorPoly<F> comultiply(const NCPoly<F>& p) const {
    std::vector<TensorPoly<F>> gen(static_cast<std::size_t>(n * n));
    for (std::size_t g = 0; g < gen.size(); ++g) gen[g] = comultiply_generator<F>(g);
    TensorPoly<F> out;
    for (const auto& [w, c] : p.terms()) {
      TensorPoly<F> term;
      term.add_term(Word{}, Word{}, c);
      for (auto g : w) {
        if (g >= gen.size()) throw IndexOutOfRange("generator outside the matrix coalgebra");
        term = term * gen[g];
      }
      out += term;
    }
    return out;
  }

  template <Field F>
  std::vector<F> counit_values() const {
    std::vector<F> v(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = F(1);
    return v;
  }

  template <Field F>
  F counit(const NCPoly<F>& p) const {
    return p.evaluate(counit_values<F>());
  }
};

/// Relation span of A(R) in degree 2.
template <Field F>
QuadraticAlgebra<F> frt_relations(const EndTensor<F>& R) {
  const int n = R.n();
  const std::size_t m = static_cast<std::size_t>(n * n);
  auto col = [&](std::size_t a, std::size_t b) { return static_cast<Column>(a * m + b); };
  // rel[(i,j,k,l)] collects entries before canonicalisation.
  std::vector<std::vector<std::pair<Column, F>>> rel(static_cast<std::size_t>(n * n * n * n));
  auto rid = [&](int i, int j, int k, int l) {
    return static_cast<std::size_t>((((i - 1) * n + (j - 1)) * n + (k - 1)) * n + (l - 1));
  };
  for (const auto& [key, v] : R.entries()) {
    auto [p, q, r, s] = EndTensor<F>::unpack(key);
    // As R^{ij}_{ab} with (i,j,a,b) = (p,q,r,s): + v t^k_a t^l_b.
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l) rel[rid(p, q, k, l)].emplace_back(col(tgen(n, k, r), tgen(n, l, s)), v);
    // As R^{ab}_{kl} with (a,b,k,l) = (p,q,r,s): - v t^b_j t^a_i.
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) rel[rid(i, j, r, s)].emplace_back(col(tgen(n, q, j), tgen(n, p, i)), -v);
  }
  std::vector<SparseVec<F>> vecs;
  for (auto& e : rel) {
    SparseVec<F> v = make_sparse<F>(std::move(e));
    if (!v.empty()) vecs.push_back(std::move(v));
  }
  return QuadraticAlgebra<F>(frt_labels(n), vecs);
}

/// The FRT bialgebra: relations plus the standard matrix coalgebra.
template <Field F>
struct FRTBialgebra {
  EndTensor<F> R;
  QuadraticAlgebra<F> algebra;
  MatrixCoalgebra coalgebra;
  const char* convention = kFrtConvention;

  explicit FRTBialgebra(EndTensor<F> r)
      : R(std::move(r)), algebra(frt_relations(R)), coalgebra{R.n(), false} {}
  int n() const { return R.n(); }
};

/// O_q(M_n) on labels x_ij:
///   q x_ks x_us = x_us x_ks (k<u),  q x_ks x_kv = x_kv x_ks (s<v),
///   x_us x_kv = x_kv x_us (s<v, k<u),
///   x_us x_kv = x_kv x_us + (q - q^-1) x_ks x_uv (s>v, u>k).
template <Field F>
QuadraticAlgebra<F> oq_matrix_relations(int n, const F& q) {
  if (n < 2) throw IndexOutOfRange("O_q(M_n) needs n >= 2");
  if (q.is_zero()) throw ZeroParameter();
  const std::size_t m = static_cast<std::size_t>(n * n);
  auto x = [&](int i, int j) { return tgen(n, i, j); };
  auto mon = [&](std::size_t a, std::size_t b) { return static_cast<Column>(a * m + b); };
  const F c = q - q.inverse();
  std::vector<SparseVec<F>> rels;
  for (int k = 1; k <= n; ++k)
    for (int s = 1; s <= n; ++s)
      for (int u = 1; u <= n; ++u)
        for (int v = 1; v <= n; ++v) {
          std::vector<std::pair<Column, F>> e;
          if (s == v && k < u) {
            e = {{mon(x(k, s), x(u, s)), q}, {mon(x(u, s), x(k, s)), F(-1)}};
          } else if (k == u && s < v) {
            e = {{mon(x(k, s), x(k, v)), q}, {mon(x(k, v), x(k, s)), F(-1)}};
          } else if (s < v && k < u) {
            e = {{mon(x(u, s), x(k, v)), F(1)}, {mon(x(k, v), x(u, s)), F(-1)}};
          } else if (s > v && u > k) {
            e = {{mon(x(u, s), x(k, v)), F(1)}, {mon(x(k, v), x(u, s)), F(-1)}, {mon(x(k, s), x(u, v)), -c}};
          } else {
            continue;
          }
          rels.push_back(make_sparse<F>(std::move(e)));
        }
  return QuadraticAlgebra<F>(matrix_labels(n, "x"), rels);
}

/// Coxeter length (number of inversions) of a permutation of 0..n-1.
inline int coxeter_length(const std::vector<int>& perm) {
  int inv = 0;
  for (std::size_t i = 0; i < perm.size(); ++i)
    for (std::size_t j = i + 1; j < perm.size(); ++j)
      if (perm[i] > perm[j]) ++inv;
  return inv;
}

/// g = Σ_σ (-q)^{-l(σ)} x_{σ(1)1} ⋯ x_{σ(n)n}.
template <Field F>
NCPoly<F> q_determinant(int n, const F& q) {
  if (n < 1 || n > 4) throw IndexOutOfRange("q-determinant is provided for n <= 4");
  if (q.is_zero()) throw ZeroParameter();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const F base = -q.inverse();
  NCPoly<F> g;
  do {
    Word w;
    for (int c = 0; c < n; ++c) w.push_back(static_cast<std::uint16_t>(perm[c] * n + c));
    g.add_term(w, pow(base, coxeter_length(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return g;
}

/// Applies the normal form of A to both tensor factors.
template <Field F>
TensorPoly<F> normal_form_tensor(const TensorPoly<F>& t, const QuadraticAlgebra<F>& A, int degree_cap = kDefaultDegreeCap) {
  // Right factors grouped by left word, then left factors grouped by right word.
  std::map<Word, NCPoly<F>, WordLess> by_left;
  for (const auto& [k, c] : t.terms()) by_left[k.first].add_term(k.second, c);
  std::map<Word, NCPoly<F>, WordLess> by_right;
  for (const auto& [lw, rp] : by_left) {
    const NCPoly<F> nf = A.normal_form(rp, degree_cap);
    for (const auto& [rw, c] : nf.terms()) by_right[rw].add_term(lw, c);
  }
  TensorPoly<F> out;
  for (const auto& [rw, lp] : by_right) {
    const NCPoly<F> nf = A.normal_form(lp, degree_cap);
    for (const auto& [lw, c] : nf.terms()) out.add_term(lw, rw, c);
  }
  return out;
}

struct GroupLikeCentralReport {
  bool central = false;
  bool grouplike = false;
  bool ok() const { return central && grouplike; }
};

/// Centrality (g x - x g = 0 for every generator) and Δ(g) = g⊗g, both in normal form.
template <Field F>
GroupLikeCentralReport grouplike_central_report(const NCPoly<F>& g, const QuadraticAlgebra<F>& A,
                                                const MatrixCoalgebra& C, int degree_cap = kDefaultDegreeCap) {
  const int d = g.degree();
  if (d + 1 > degree_cap) throw DegreeTooLarge("centrality check needs degree " + std::to_string(d + 1));
  GroupLikeCentralReport rep;
  rep.central = true;
  for (std::size_t x = 0; x < A.m() && rep.central; ++x) {
    NCPoly<F> gx = NCPoly<F>::generator(x);
    if (!A.normal_form(g * gx - gx * g, degree_cap).is_zero()) rep.central = false;
  }
  TensorPoly<F> diff = C.comultiply(g) - TensorPoly<F>::pure(g, g);
  rep.grouplike = normal_form_tensor(diff, A, degree_cap).is_zero();
  return rep;
}

template <Field F>
bool is_grouplike_central(const NCPoly<F>& g, const QuadraticAlgebra<F>& A, const MatrixCoalgebra& C,
                          int degree_cap = kDefaultDegreeCap) {
  return grouplike_central_report(g, A, C, degree_cap).ok();
}

/// Δ(R) ⊆ R⊗F + F⊗R (checked in A_2⊗A_2) and ε(R) = 0.
template <Field F>
bool is_bi_ideal(const QuadraticAlgebra<F>& A, const MatrixCoalgebra& C) {
  for (const auto& r : A.relation_polys()) {
    if (!C.counit(r).is_zero()) return false;
    if (!normal_form_tensor(C.comultiply(r), A).is_zero()) return false;
  }
  return true;
}

/// end(A) = A!•A on generators z^k_j (index (k-1)m + (j-1)) with
/// Δ(z^k_j) = Σ_i z^i_j ⊗ z^k_i and ε(z^k_j) = δ_kj.
template <Field F>
struct ManinEnd {
  QuadraticAlgebra<F> algebra;
  MatrixCoalgebra coalgebra;
};

inline std::vector<std::string> manin_labels(std::size_t m) {
  std::vector<std::string> out;
  for (std::size_t k = 1; k <= m; ++k)
    for (std::size_t j = 1; j <= m; ++j) out.push_back("z^" + std::to_string(k) + "_" + std::to_string(j));
  return out;
}

template <Field F>
ManinEnd<F> manin_end(const QuadraticAlgebra<F>& A) {
  return {bullet(koszul_dual(A), A, manin_labels(A.m())), MatrixCoalgebra{static_cast<int>(A.m()), true}};
}

/// The generator-level pair (end^r((φ⁻¹)^!), end^l(φ)) on end(A):
///   end^l(φ)(z^k_j) = Σ_s a_js z^k_s,   end^r((φ⁻¹)^!)(z^k_j) = Σ_l b_lk z^l_j,
/// with a the matrix of φ and b its inverse.
template <Field F>
struct ManinPair {
  GradedAut<F> phi1;  // end^r((φ⁻¹)^!)
  GradedAut<F> phi2;  // end^l(φ)
};

template <Field F>
ManinPair<F> manin_twisting_pair(const QuadraticAlgebra<F>& A, const GradedAut<F>& phi) {
  ManinEnd<F> E = manin_end(A);
  const std::size_t m = A.m();
  Matrix<F> id = Matrix<F>::identity(m);
  return {GradedAut<F>(E.algebra, kronecker(phi.inverse_matrix().transpose(), id)),
          GradedAut<F>(E.algebra, kronecker(id, phi.matrix()))};
}

}  // namespace qtwist
