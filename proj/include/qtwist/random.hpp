#pragma once

// Random small quadratic algebras for property checks.

#include <algorithm>
#include <random>
#include <vector>

#include "qtwist/quadratic.hpp"

namespace qtwist {

template <Field F>
struct AlgebraWithAut {
  QuadraticAlgebra<F> algebra;
  GradedAut<F> aut;
};

namespace detail {

inline std::vector<std::string> default_labels(std::size_t m) {
  static const char* names[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < m; ++i) out.push_back(i < 4 ? names[i] : "x" + std::to_string(i + 1));
  return out;
}

template <Field F>
F small_int(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-2, 2);
  return F(Rational(d(rng)));
}

template <Field F>
Matrix<F> random_invertible(std::size_t m, std::mt19937_64& rng) {
  Matrix<F> Q(m, m);
  do {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) Q(i, j) = small_int<F>(rng);
  } while (!Q.is_invertible());
  return Q;
}

}  // namespace detail

/// m generators, between 1 and m²-1 independent relations with entries in -2..2.
template <Field F>
QuadraticAlgebra<F> random_quadratic_algebra(std::size_t m, std::mt19937_64& rng) {
  const Column dim = static_cast<Column>(m * m);
  std::uniform_int_distribution<std::size_t> count(1, dim - 1);
  const std::size_t k = count(rng);
  EchelonBasis<F> span;
  std::vector<SparseVec<F>> rels;
  while (rels.size() < k) {
    std::vector<std::pair<Column, F>> e;
    for (Column c = 0; c < dim; ++c) e.emplace_back(c, detail::small_int<F>(rng));
    SparseVec<F> v = make_sparse<F>(std::move(e));
    if (v.empty() || !span.add(v)) continue;
    rels.push_back(std::move(v));
  }
  return QuadraticAlgebra<F>(detail::default_labels(m), rels);
}

/// A random algebra together with a graded automorphism φ.
/// Relations R0 lie in eigenspaces of D⊗D for a diagonal D; a random base change Q
/// then gives R = R0·(Q⊗Q) and φ with matrix Q⁻¹ D Q.
template <Field F>
AlgebraWithAut<F> random_algebra_with_aut(std::size_t m, std::mt19937_64& rng) {
  static const Rational pool[] = {Rational(1), Rational(-1), Rational(2), Rational(1, 2), Rational(3)};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pool) - 1);
  std::vector<F> d(m);
  for (auto& x : d) x = F(pool[pick(rng)]);

  std::vector<std::vector<Column>> eig;
  {
    std::vector<std::pair<F, std::vector<Column>>> tmp;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        F val = d[a] * d[b];
        auto it = std::find_if(tmp.begin(), tmp.end(), [&](const auto& g) { return g.first == val; });
        if (it == tmp.end())
          tmp.push_back({val, {static_cast<Column>(a * m + b)}});
        else
          it->second.push_back(static_cast<Column>(a * m + b));
      }
    for (auto& g : tmp) eig.push_back(std::move(g.second));
  }

  const Column dim = static_cast<Column>(m * m);
  std::uniform_int_distribution<std::size_t> count(1, dim - 1);
  const std::size_t k = count(rng);
  std::uniform_int_distribution<std::size_t> group(0, eig.size() - 1);
  EchelonBasis<F> span;
  std::vector<SparseVec<F>> rels;
  for (int attempt = 0; rels.size() < k && attempt < 200; ++attempt) {
    const auto& cols = eig[group(rng)];
    std::vector<std::pair<Column, F>> e;
    for (Column c : cols) e.emplace_back(c, detail::small_int<F>(rng));
    SparseVec<F> v = make_sparse<F>(std::move(e));
    if (v.empty() || !span.add(v)) continue;
    rels.push_back(std::move(v));
  }

  const Matrix<F> Q = detail::random_invertible<F>(m, rng);
  std::vector<SparseVec<F>> moved;
  for (const auto& r : rels) moved.push_back(apply_tensor(r, m, Q, Q));
  QuadraticAlgebra<F> A(detail::default_labels(m), moved);
  Matrix<F> M = Q.inverse() * Matrix<F>::diagonal(d) * Q;
  return {A, GradedAut<F>(A, std::move(M))};
}

}  // namespace qtwist
