/**
 * @file quadratic.hpp
 * Quadratic algebras k<x_1..x_m>/(R) with R inside V⊗V.
 *
 * A relation is a vector over the m² words x_a x_b, column a*m + b (0-based). Relation
 * bases are stored fully reduced, pivot at the largest column, rows sorted by pivot,
 * so two presentations of the same span compare equal entry by entry. Words whose
 * column is not a pivot of the degree-d ideal form the monomial basis of A_d.
 */
#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qtwist/linalg.hpp"
#include "qtwist/matrix.hpp"
#include "qtwist/ncpoly.hpp"

namespace qtwist {

inline constexpr int kDefaultDegreeCap = 6;
inline constexpr Column kMaxTensorSpace = 1'000'000;

/// Degree-d piece of a quadratic algebra, computed by row reduction of the ideal.
template <Field F>
struct GradedComponent {
  int degree = 0;
  std::size_t m = 0;
  std::size_t dimension = 0;
  std::vector<Word> basis;  // non-pivot words, increasing
  EchelonBasis<F> ideal;    // I_d inside V^{⊗d}

  /// Normal form of a homogeneous degree-d polynomial, supported on `basis`.
  NCPoly<F> normal_form(const NCPoly<F>& p) const {
    if (p.is_zero()) return p;
    if (p.degree() != degree) throw DimensionMismatch("normal form requested in the wrong degree");
    return NCPoly<F>::from_vector(ideal.normal_form(p.to_vector(m)), m, degree);
  }
};

template <Field F>
class QuadraticAlgebra {
 public:
  QuadraticAlgebra() : cache_(std::make_shared<Cache>()) {}

  /// Generators with the given labels and relation span of `relations` (any spanning set).
  QuadraticAlgebra(std::vector<std::string> labels, const std::vector<SparseVec<F>>& relations)
      : labels_(std::move(labels)), cache_(std::make_shared<Cache>()) {
    const Column dim = static_cast<Column>(m()) * m();
    for (const auto& r : relations)
      for (const auto& [c, v] : r)
        if (c >= dim) throw IndexOutOfRange("relation column outside the 2-tensor space");
    relations_ = row_reduce(relations);
  }

  static QuadraticAlgebra from_polys(std::vector<std::string> labels,
                                     const std::vector<NCPoly<F>>& rels) {
    const std::size_t m = labels.size();
    std::vector<SparseVec<F>> vecs;
    for (const auto& p : rels) {
      if (p.is_zero()) continue;
      if (p.degree() != 2) throw DimensionMismatch("relations of a quadratic algebra have degree 2");
      vecs.push_back(p.to_vector(m));
    }
    return QuadraticAlgebra(std::move(labels), vecs);
  }

  /// Free algebra on the given labels.
  static QuadraticAlgebra free(std::vector<std::string> labels) { return QuadraticAlgebra(std::move(labels), {}); }

  std::size_t m() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<SparseVec<F>>& relations() const { return relations_; }
  std::size_t relation_count() const { return relations_.size(); }

  std::vector<NCPoly<F>> relation_polys() const {
    std::vector<NCPoly<F>> out;
    for (const auto& r : relations_) out.push_back(NCPoly<F>::from_vector(r, m(), 2));
    return out;
  }

  /// Degree-d component; cached per degree, thread-safe.
  std::shared_ptr<const GradedComponent<F>> component(int d, int degree_cap = kDefaultDegreeCap) const {
    if (d < 0) throw DimensionMismatch("negative degree");
    {
      std::lock_guard lock(cache_->mu);
      auto it = cache_->components.find(d);
      if (it != cache_->components.end()) return it->second;
    }
    if (d > degree_cap)
      throw DegreeTooLarge("degree " + std::to_string(d) + " exceeds cap " + std::to_string(degree_cap));
    Column size = 1;
    for (int i = 0; i < d; ++i) {
      size *= static_cast<Column>(std::max<std::size_t>(m(), 1));
      if (size > kMaxTensorSpace)
        throw DegreeTooLarge("tensor space of degree " + std::to_string(d) + " exceeds " +
                             std::to_string(kMaxTensorSpace) + " dimensions");
    }
    auto comp = std::make_shared<GradedComponent<F>>();
    comp->degree = d;
    comp->m = m();
    if (d >= 2 && !relations_.empty()) {
      // I_d is spanned by u·r·w with |u| + |w| = d - 2.
      const Column mm = m();
      for (int i = 0; i <= d - 2; ++i) {
        Column left_count = 1, right_count = 1;
        for (int t = 0; t < i; ++t) left_count *= mm;
        for (int t = 0; t < d - 2 - i; ++t) right_count *= mm;
        for (Column u = 0; u < left_count; ++u)
          for (const auto& r : relations_)
            for (Column w = 0; w < right_count; ++w) {
              SparseVec<F> v;
              v.reserve(r.size());
              for (const auto& [c, x] : r) v.emplace_back((u * mm * mm + c) * right_count + w, x);
              comp->ideal.add(std::move(v));
            }
      }
    }
    for (Column c = 0; c < size; ++c)
      if (!comp->ideal.is_pivot(c)) comp->basis.push_back(column_word(c, m(), d));
    comp->dimension = comp->basis.size();
    std::lock_guard lock(cache_->mu);
    return cache_->components.emplace(d, std::move(comp)).first->second;
  }

  std::size_t dimension(int d, int degree_cap = kDefaultDegreeCap) const {
    return component(d, degree_cap)->dimension;
  }

  /// Normal form of an arbitrary polynomial, one homogeneous component at a time.
  NCPoly<F> normal_form(const NCPoly<F>& p, int degree_cap = kDefaultDegreeCap) const {
    NCPoly<F> out;
    for (const auto& [d, part] : p.components()) out += component(d, degree_cap)->normal_form(part);
    return out;
  }

 private:
  struct Cache {
    std::mutex mu;
    std::map<int, std::shared_ptr<const GradedComponent<F>>> components;
  };

  std::vector<std::string> labels_;
  std::vector<SparseVec<F>> relations_;
  std::shared_ptr<Cache> cache_;
};

/// Graded dimensions dim A_0, ..., dim A_top.
template <Field F>
std::vector<std::size_t> hilbert_dims(const QuadraticAlgebra<F>& A, int top, int degree_cap = kDefaultDegreeCap) {
  std::vector<std::size_t> d;
  for (int i = 0; i <= top; ++i) d.push_back(A.dimension(i, degree_cap));
  return d;
}

/// Image of a relation vector under f⊗g, where f, g are given by row-convention matrices:
/// f(x_a) = Σ_s F[a][s] x_s.
template <Field F>
SparseVec<F> apply_tensor(const SparseVec<F>& r, std::size_t m, const Matrix<F>& left, const Matrix<F>& right) {
  std::vector<std::pair<Column, F>> out;
  for (const auto& [col, c] : r) {
    std::size_t a = col / m, b = col % m;
    for (std::size_t s = 0; s < m; ++s) {
      if (left(a, s).is_zero()) continue;
      F ca = c * left(a, s);
      for (std::size_t t = 0; t < m; ++t)
        if (!right(b, t).is_zero()) out.emplace_back(static_cast<Column>(s * m + t), ca * right(b, t));
    }
  }
  return make_sparse<F>(std::move(out));
}

/// Graded automorphism given by its action on generators, φ(x_j) = Σ_s M[j][s] x_s.
template <Field F>
class GradedAut {
 public:
  /// Validates invertibility and (M⊗M)(R) ⊆ R; throws NotAnAutomorphism otherwise.
  GradedAut(const QuadraticAlgebra<F>& A, Matrix<F> M) : m_(std::move(M)) {
    if (m_.rows() != A.m() || m_.cols() != A.m())
      throw DimensionMismatch("automorphism matrix does not match the generator count");
    if (!m_.is_invertible()) throw NotAnAutomorphism("matrix is singular");
    inv_ = m_.inverse();
    if (!preserves(A, m_)) throw NotAnAutomorphism("relation space is not preserved");
  }

  /// Builds without validation (for maps already known to be automorphisms).
  static GradedAut unchecked(Matrix<F> M) { return GradedAut(std::move(M)); }

  static GradedAut identity(std::size_t m) { return unchecked(Matrix<F>::identity(m)); }

  static bool preserves(const QuadraticAlgebra<F>& A, const Matrix<F>& M) {
    EchelonBasis<F> span;
    for (const auto& r : A.relations()) span.add(r);
    for (const auto& r : A.relations())
      if (!span.contains(apply_tensor(r, A.m(), M, M))) return false;
    return true;
  }

  const Matrix<F>& matrix() const { return m_; }
  const Matrix<F>& inverse_matrix() const { return inv_; }
  std::size_t m() const { return m_.rows(); }

  GradedAut inverse() const {
    GradedAut r = unchecked(inv_);
    return r;
  }

  /// Matrix of φ^p in the row convention.
  Matrix<F> power_matrix(long p) const { return p >= 0 ? m_.power(p) : inv_.power(-p); }

  std::vector<NCPoly<F>> generator_images(long p = 1) const {
    Matrix<F> P = power_matrix(p);
    std::vector<NCPoly<F>> img(m());
    for (std::size_t j = 0; j < m(); ++j)
      for (std::size_t s = 0; s < m(); ++s)
        if (!P(j, s).is_zero()) img[j] += NCPoly<F>::generator(s) * P(j, s);
    return img;
  }

  NCPoly<F> apply(const NCPoly<F>& p, long power = 1) const { return p.substitute(generator_images(power)); }

  /// φ∘ψ.
  friend GradedAut compose(const GradedAut& phi, const GradedAut& psi) {
    return unchecked(psi.m_ * phi.m_);
  }

 private:
  explicit GradedAut(Matrix<F> M) : m_(std::move(M)), inv_(m_.inverse()) {}

  Matrix<F> m_;
  Matrix<F> inv_;
};

/// Label of the dual generator; applying twice restores the original label.
inline std::string dual_label(const std::string& s) {
  if (!s.empty() && s.back() == '!') return s.substr(0, s.size() - 1);
  return s + "!";
}

/// A! = k<V*>/(R^⊥).
template <Field F>
QuadraticAlgebra<F> koszul_dual(const QuadraticAlgebra<F>& A) {
  std::vector<std::string> labels;
  for (const auto& l : A.labels()) labels.push_back(dual_label(l));
  const Column dim = static_cast<Column>(A.m()) * A.m();
  return QuadraticAlgebra<F>(std::move(labels), orthogonal_complement(A.relations(), dim));
}

/// A•B on generators (a, b) with index a*mB + b and relations S₂₃(R(A)⊗R(B)).
template <Field F>
QuadraticAlgebra<F> bullet(const QuadraticAlgebra<F>& A, const QuadraticAlgebra<F>& B,
                           std::vector<std::string> labels = {}) {
  const std::size_t ma = A.m(), mb = B.m(), M = ma * mb;
  if (labels.empty())
    for (std::size_t a = 0; a < ma; ++a)
      for (std::size_t b = 0; b < mb; ++b) labels.push_back("(" + A.labels()[a] + "," + B.labels()[b] + ")");
  if (labels.size() != M) throw DimensionMismatch("bullet product label count");
  std::vector<SparseVec<F>> rels;
  for (const auto& r : A.relations())
    for (const auto& s : B.relations()) {
      std::vector<std::pair<Column, F>> e;
      for (const auto& [cr, vr] : r) {
        Column a1 = cr / ma, a2 = cr % ma;
        for (const auto& [cs, vs] : s) {
          Column b1 = cs / mb, b2 = cs % mb;
          e.emplace_back((a1 * mb + b1) * M + (a2 * mb + b2), vr * vs);
        }
      }
      rels.push_back(make_sparse<F>(std::move(e)));
    }
  return QuadraticAlgebra<F>(std::move(labels), rels);
}

/// Relations of the right Zhang twist A^φ: (id⊗φ⁻¹)(R).
template <Field F>
QuadraticAlgebra<F> zhang_twist_relations(const QuadraticAlgebra<F>& A, const GradedAut<F>& phi) {
  if (phi.m() != A.m()) throw DimensionMismatch("automorphism size");
  const Matrix<F> id = Matrix<F>::identity(A.m());
  std::vector<SparseVec<F>> rels;
  for (const auto& r : A.relations()) rels.push_back(apply_tensor(r, A.m(), id, phi.inverse_matrix()));
  return QuadraticAlgebra<F>(A.labels(), rels);
}

/// r *_φ s = Σ_d r_d φ^d(s), computed in the free algebra.
template <Field F>
NCPoly<F> twisted_multiply(const NCPoly<F>& r, const NCPoly<F>& s, const GradedAut<F>& phi) {
  NCPoly<F> out;
  for (const auto& [d, part] : r.components()) out += part * phi.apply(s, d);
  return out;
}

/// φ^! on A!, the transpose in the row convention; validated against R^⊥.
template <Field F>
GradedAut<F> dual_automorphism(const QuadraticAlgebra<F>& A, const GradedAut<F>& phi) {
  return GradedAut<F>(koszul_dual(A), phi.matrix().transpose());
}

/// True iff the reduced relation bases coincide, generators matched by position.
template <Field F>
bool relation_span_equal(const QuadraticAlgebra<F>& A, const QuadraticAlgebra<F>& B) {
  if (A.m() != B.m())
    throw AlphabetMismatch("generator counts differ: " + std::to_string(A.m()) + " vs " + std::to_string(B.m()));
  return A.relations() == B.relations();
}

/// Variant with a bijection: generator i of A corresponds to generator perm[i] of B.
template <Field F>
bool relation_span_equal(const QuadraticAlgebra<F>& A, const QuadraticAlgebra<F>& B,
                         const std::vector<std::size_t>& perm) {
  if (A.m() != B.m() || perm.size() != A.m()) throw AlphabetMismatch("bijection size mismatch");
  std::vector<bool> seen(A.m(), false);
  for (auto p : perm) {
    if (p >= A.m() || seen[p]) throw AlphabetMismatch("not a bijection");
    seen[p] = true;
  }
  const std::size_t m = A.m();
  std::vector<SparseVec<F>> moved;
  for (const auto& r : A.relations()) {
    std::vector<std::pair<Column, F>> e;
    for (const auto& [c, v] : r) e.emplace_back(perm[c / m] * m + perm[c % m], v);
    moved.push_back(make_sparse<F>(std::move(e)));
  }
  return row_reduce(moved) == B.relations();
}

/// Kronecker product of row-convention matrices: (f⊗g)(x_a⊗y_b).
template <Field F>
Matrix<F> kronecker(const Matrix<F>& a, const Matrix<F>& b) {
  Matrix<F> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) k(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return k;
}

/// Evaluates every coefficient at q = q0.
inline QuadraticAlgebra<Rational> specialize(const QuadraticAlgebra<RatFunc>& A, const Rational& q0) {
  std::vector<SparseVec<Rational>> rels;
  for (const auto& r : A.relations()) {
    std::vector<std::pair<Column, Rational>> e;
    for (const auto& [c, v] : r) e.emplace_back(c, specialize(v, q0));
    rels.push_back(make_sparse<Rational>(std::move(e)));
  }
  return QuadraticAlgebra<Rational>(A.labels(), rels);
}

}  // namespace qtwist
