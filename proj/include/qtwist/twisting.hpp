/**
 * @file twisting.hpp
 * Twisting pairs of A(R) and of A(R_q)[g^-1], winding maps and the induced 2-cocycle.
 *
 * A pair is given by an invertible α with β = α⁻¹, α^u_i being row u, column i:
 *     φ1(t^j_i) = Σ_u α^u_i t^j_u   (φ1(T) = T α),
 *     φ2(t^j_i) = Σ_u β^j_u t^u_i   (φ2(T) = α⁻¹ T).
 * The characters are π1 = ε∘φ1 : t^k_i ↦ α^k_i and π2 = ε∘φ2 : t^k_i ↦ β^k_i.
 */
#pragma once

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qtwist/frt.hpp"

namespace qtwist {

enum class QCase { One, MinusOne, Generic };

inline std::string to_string(QCase c) {
  switch (c) {
    case QCase::One: return "one";
    case QCase::MinusOne: return "minus-one";
    case QCase::Generic: return "generic";
  }
  return "?";
}

/// Character values on the t-generators: value[tgen(r, c)] = M(r, c).
template <Field F>
std::vector<F> matrix_character(const Matrix<F>& M) {
  const int n = static_cast<int>(M.rows());
  std::vector<F> v(static_cast<std::size_t>(n * n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) v[tgen(n, r, c)] = M(r - 1, c - 1);
  return v;
}

/// Index of the first relation of frt_relations(R) not killed by t^j_i ↦ α^j_i.
template <Field F>
std::optional<std::size_t> violated_relation(const QuadraticAlgebra<F>& frt, const Matrix<F>& alpha) {
  auto values = matrix_character(alpha);
  auto rels = frt.relation_polys();
  for (std::size_t i = 0; i < rels.size(); ++i)
    if (!rels[i].evaluate(values).is_zero()) return i;
  return std::nullopt;
}

template <Field F>
bool check_twisting_pair(const QuadraticAlgebra<F>& frt, const Matrix<F>& alpha) {
  const std::size_t n = alpha.rows();
  if (!alpha.is_square() || n * n != frt.m()) return false;
  if (!alpha.is_invertible()) return false;
  return !violated_relation(frt, alpha).has_value();
}

template <Field F>
bool check_twisting_pair(const EndTensor<F>& R, const Matrix<F>& alpha) {
  if (alpha.rows() != static_cast<std::size_t>(R.n())) return false;
  return check_twisting_pair(frt_relations(R), alpha);
}

template <Field F>
class TwistingPair {
 public:
  /// Validated against R; throws InvalidPair naming the first violated relation.
  TwistingPair(const EndTensor<F>& R, Matrix<F> alpha) : alpha_(std::move(alpha)) {
    if (!alpha_.is_square() || alpha_.rows() != static_cast<std::size_t>(R.n()))
      throw InvalidPair("alpha must be " + std::to_string(R.n()) + "x" + std::to_string(R.n()));
    if (!alpha_.is_invertible()) throw InvalidPair("alpha is singular");
    beta_ = alpha_.inverse();
    if (auto bad = violated_relation(frt_relations(R), alpha_))
      throw InvalidPair("alpha violates FRT relation #" + std::to_string(*bad + 1));
  }

  /// No relation check; used when admissibility is known from the q-case.
  static TwistingPair unchecked(Matrix<F> alpha) { return TwistingPair(std::move(alpha)); }

  int n() const { return static_cast<int>(alpha_.rows()); }
  const Matrix<F>& alpha() const { return alpha_; }
  const Matrix<F>& beta() const { return beta_; }

  /// Componentwise composite (φ1∘φ1', φ2∘φ2'), i.e. α·α'.
  friend TwistingPair operator*(const TwistingPair& a, const TwistingPair& b) {
    return unchecked(a.alpha_ * b.alpha_);
  }
  TwistingPair inverse() const { return unchecked(beta_); }

  std::vector<F> pi1() const { return matrix_character(alpha_); }
  std::vector<F> pi2() const { return matrix_character(beta_); }

 private:
  explicit TwistingPair(Matrix<F> alpha) : alpha_(std::move(alpha)), beta_(alpha_.inverse()) {}

  Matrix<F> alpha_;
  Matrix<F> beta_;
};

/// Membership in the admissible family for the q-case.
template <Field F>
bool twisting_family_admits(QCase c, const Matrix<F>& alpha) {
  if (!alpha.is_square() || !alpha.is_invertible()) return false;
  switch (c) {
    case QCase::One: return true;
    case QCase::MinusOne: return alpha.is_generalized_permutation();
    case QCase::Generic: return alpha.is_diagonal();
  }
  return false;
}

/// Small exact scalars used for random pairs.
inline Rational random_pair_scalar(std::mt19937_64& rng) {
  static const Rational pool[] = {Rational(1), Rational(-1), Rational(2), Rational(-2),
                                  Rational(1, 2), Rational(-1, 2), Rational(3)};
  std::uniform_int_distribution<std::size_t> d(0, std::size(pool) - 1);
  return pool[d(rng)];
}

/// Random member of the admissible family.
template <Field F>
Matrix<F> sample_twisting_alpha(QCase c, int n, std::mt19937_64& rng) {
  Matrix<F> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  switch (c) {
    case QCase::One: {
      std::bernoulli_distribution zero(0.3);
      do {
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) a(i, j) = zero(rng) ? F() : F(random_pair_scalar(rng));
      } while (!a.is_invertible());
      return a;
    }
    case QCase::MinusOne: {
      std::vector<int> perm(static_cast<std::size_t>(n));
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      for (int i = 0; i < n; ++i) a(i, perm[i]) = F(random_pair_scalar(rng));
      return a;
    }
    case QCase::Generic:
      for (int i = 0; i < n; ++i) a(i, i) = F(random_pair_scalar(rng));
      return a;
  }
  return a;
}

/// Random matrix outside the family (singular for q = 1, invertible otherwise).
template <Field F>
Matrix<F> sample_non_member(QCase c, int n, std::mt19937_64& rng) {
  for (;;) {
    Matrix<F> a(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    std::bernoulli_distribution zero(0.4);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = zero(rng) ? F() : F(random_pair_scalar(rng));
    if (c == QCase::One) {
      for (int j = 0; j < n; ++j) a(n - 1, j) = a(0, j) * F(2);  // two proportional rows
      return a;
    }
    if (a.is_invertible() && !twisting_family_admits(c, a)) return a;
  }
}

enum class PhiWhich { Phi1, Phi2 };

/// Images of the t-generators under φ1^p or φ2^p.
template <Field F>
std::vector<NCPoly<F>> phi_generator_images(const TwistingPair<F>& pair, PhiWhich which, long power) {
  const int n = pair.n();
  // φ1^p(T) = T α^p and φ2^p(T) = α^{-p} T.
  Matrix<F> P = which == PhiWhich::Phi1 ? pair.alpha().power(power) : pair.alpha().power(-power);
  std::vector<NCPoly<F>> img(static_cast<std::size_t>(n * n));
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= n; ++c) {
      NCPoly<F>& out = img[tgen(n, r, c)];
      for (int u = 1; u <= n; ++u) {
        if (which == PhiWhich::Phi1) {
          const F& a = P(u - 1, c - 1);
          if (!a.is_zero()) out += NCPoly<F>::generator(tgen(n, r, u)) * a;
        } else {
          const F& b = P(r - 1, u - 1);
          if (!b.is_zero()) out += NCPoly<F>::generator(tgen(n, u, c)) * b;
        }
      }
    }
  return img;
}

template <Field F>
NCPoly<F> apply_phi(const TwistingPair<F>& pair, PhiWhich which, long power, const NCPoly<F>& m) {
  return m.substitute(phi_generator_images(pair, which, power));
}

/// Row-convention matrix of φ1^p or φ2^p on the n² generators.
template <Field F>
Matrix<F> phi_matrix(const TwistingPair<F>& pair, PhiWhich which, long power = 1) {
  const auto img = phi_generator_images(pair, which, power);
  Matrix<F> M(img.size(), img.size());
  for (std::size_t g = 0; g < img.size(); ++g)
    for (const auto& [w, c] : img[g].terms()) M(g, w[0]) = c;
  return M;
}

/// φ1∘φ2 as a graded automorphism of the FRT algebra; t ↦ (α⁻¹ T α) entrywise.
template <Field F>
GradedAut<F> composite_automorphism(const QuadraticAlgebra<F>& frt, const TwistingPair<F>& pair) {
  return GradedAut<F>(frt, phi_matrix(pair, PhiWhich::Phi2) * phi_matrix(pair, PhiWhich::Phi1));
}

/// poly · g^{-r} in A(R_q)[g^{-1}].
template <Field F>
struct LaurentElement {
  NCPoly<F> poly;
  int gpower = 0;

  friend bool operator==(const LaurentElement&, const LaurentElement&) = default;
};

/// c with φ1(g) = c·g, namely the q-determinant of α; φ2(g) = c⁻¹·g.
template <Field F>
F g_factor(const TwistingPair<F>& pair, const F& q) {
  return q_determinant(pair.n(), q).evaluate(pair.pi1());
}

template <Field F>
LaurentElement<F> apply_phi(const TwistingPair<F>& pair, PhiWhich which, long power, const LaurentElement<F>& x,
                            const F& q) {
  // φ1^p(g^{-1}) = c^{-p} g^{-1}, φ2^p(g^{-1}) = c^{p} g^{-1}.
  const long e = (which == PhiWhich::Phi1 ? -power : power) * x.gpower;
  NCPoly<F> image = apply_phi(pair, which, power, x.poly);
  if (e != 0) image = image * pow(g_factor(pair, q), e);
  return {image, x.gpower};
}

/// Clears denominators: x·g^{s} = y·g^{r} with s, r the g-powers, compared in normal form.
template <Field F>
bool laurent_equal(const LaurentElement<F>& x, const LaurentElement<F>& y, const NCPoly<F>& g,
                   const QuadraticAlgebra<F>& A, int degree_cap = kDefaultDegreeCap) {
  NCPoly<F> lhs = x.poly, rhs = y.poly;
  for (int i = 0; i < y.gpower; ++i) lhs = lhs * g;
  for (int i = 0; i < x.gpower; ++i) rhs = rhs * g;
  return A.normal_form(lhs - rhs, degree_cap).is_zero();
}

enum class Side { Left, Right };

/// Ξ^l[π](m) = Σ π(m1) m2, Ξ^r[π](m) = Σ m1 π(m2). π must kill the relations of A.
template <Field F>
NCPoly<F> winding(const QuadraticAlgebra<F>& A, const MatrixCoalgebra& C, const std::vector<F>& pi, Side side,
                  const NCPoly<F>& m) {
  if (pi.size() != A.m()) throw NotACharacter("character has the wrong number of generator values");
  for (const auto& r : A.relation_polys())
    if (!r.evaluate(pi).is_zero()) throw NotACharacter("values do not annihilate the relations");
  NCPoly<F> out;
  const TensorPoly<F> delta = C.comultiply(m);
  for (const auto& [k, c] : delta.terms()) {
    const Word& keep = side == Side::Left ? k.second : k.first;
    const Word& eval = side == Side::Left ? k.first : k.second;
    F v = NCPoly<F>::monomial(eval, F(1)).evaluate(pi);
    out.add_term(keep, c * v);
  }
  return out;
}

/// Degree of poly·g^{-r} with deg t = 1 and deg g^{-1} = -n.
template <Field F>
long laurent_degree(const LaurentElement<F>& x, int n) {
  int d = x.poly.is_zero() ? 0 : x.poly.degree();
  return d - static_cast<long>(n) * x.gpower;
}

/// σ(x, y) = ε(x) ε(φ2^{|x|}(y)) on homogeneous Laurent elements.
template <Field F>
F cocycle_sigma(const TwistingPair<F>& pair, const F& q, const LaurentElement<F>& x, const LaurentElement<F>& y) {
  MatrixCoalgebra C{pair.n(), false};
  const long d = laurent_degree(x, pair.n());
  F ex = C.counit(x.poly);
  if (ex.is_zero()) return F();
  return ex * C.counit(apply_phi(pair, PhiWhich::Phi2, d, y, q).poly);
}

/// σ⁻¹(x, y) = ε(x) ε(φ1^{|x|}(y)).
template <Field F>
F cocycle_sigma_inverse(const TwistingPair<F>& pair, const F& q, const LaurentElement<F>& x,
                        const LaurentElement<F>& y) {
  MatrixCoalgebra C{pair.n(), false};
  const long d = laurent_degree(x, pair.n());
  F ex = C.counit(x.poly);
  if (ex.is_zero()) return F();
  return ex * C.counit(apply_phi(pair, PhiWhich::Phi1, d, y, q).poly);
}

/// x_{i1 j1}^{p1} ⋯ x_{is js}^{ps} g^{-r}, factors as (i, j, p) with 1-based indices.
struct LaurentMonomial {
  struct Factor {
    int i, j, p;
  };
  std::vector<Factor> factors;
  int r = 0;

  template <Field F>
  LaurentElement<F> to_element(int n) const {
    Word w;
    for (const auto& f : factors)
      for (int k = 0; k < f.p; ++k) w.push_back(static_cast<std::uint16_t>(tgen(n, f.i, f.j)));
    return {NCPoly<F>::monomial(w, F(1)), r};
  }
  int degree() const {
    int d = 0;
    for (const auto& f : factors) d += f.p;
    return d;
  }
};

/// The permutation τ with α(τ(i), i) ≠ 0 for a generalized permutation matrix (0-based).
template <Field F>
std::vector<int> support_permutation_by_column(const Matrix<F>& alpha) {
  const int n = static_cast<int>(alpha.rows());
  std::vector<int> tau(static_cast<std::size_t>(n), -1);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      if (!alpha(r, c).is_zero()) tau[c] = r;
  return tau;
}

/// Closed form of σ on Laurent monomials:
/// (-1)^{m t l(τ)} Π δ_{i j} Π ((α^{-m})_{uv})^{q} |α|^{m t},  m = Σp - n r.
template <Field F>
F cocycle_closed_form(const TwistingPair<F>& pair, QCase qcase, const LaurentMonomial& x, const LaurentMonomial& y) {
  const int n = pair.n();
  const long m = x.degree() - static_cast<long>(n) * x.r;
  for (const auto& f : x.factors)
    if (f.p > 0 && f.i != f.j) return F();
  const Matrix<F> Am = pair.alpha().power(-m);
  F value(1);
  for (const auto& f : y.factors) value *= pow(Am(f.i - 1, f.j - 1), f.p);
  int ltau = qcase == QCase::MinusOne ? coxeter_length(support_permutation_by_column(pair.alpha())) : 0;
  const long e = m * y.r;
  if ((e * ltau) % 2 != 0) value = -value;
  return value * pow(pair.alpha().determinant(), e);
}

/// Bilinear form on pairs of words.
template <Field F>
using WordForm = std::function<F(const Word&, const Word&)>;

template <Field F>
WordForm<F> sigma_form(const TwistingPair<F>& pair, const F& q) {
  return [pair, q](const Word& x, const Word& y) {
    return cocycle_sigma(pair, q, LaurentElement<F>{NCPoly<F>::monomial(x, F(1)), 0},
                         LaurentElement<F>{NCPoly<F>::monomial(y, F(1)), 0});
  };
}

template <Field F>
WordForm<F> sigma_inverse_form(const TwistingPair<F>& pair, const F& q) {
  return [pair, q](const Word& x, const Word& y) {
    return cocycle_sigma_inverse(pair, q, LaurentElement<F>{NCPoly<F>::monomial(x, F(1)), 0},
                                 LaurentElement<F>{NCPoly<F>::monomial(y, F(1)), 0});
  };
}

struct CocycleCheckOptions {
  int exhaustive_degree = 1;  // all triples of words of degree <= this
  int random_degree = 2;      // extra random triples of words of exactly this degree
  int random_triples = 0;
  std::uint64_t seed = 1;
};

struct CocycleCheckResult {
  bool ok = true;
  std::size_t triples = 0;
  std::string failure;  // description of the first failing identity
};

/// Verifies the 2-cocycle identities, unit conditions and convolution inverse on triples of
/// monomials. Products are reduced to normal form in A before the forms are evaluated.
template <Field F>
CocycleCheckResult check_cocycle_identity(const QuadraticAlgebra<F>& A, const MatrixCoalgebra& C,
                                          const WordForm<F>& sigma, const WordForm<F>& sigma_inv,
                                          const CocycleCheckOptions& opt) {
  CocycleCheckResult res;
  auto form_on = [&](const WordForm<F>& f, const NCPoly<F>& a, const NCPoly<F>& b) {
    F s;
    for (const auto& [wa, ca] : a.terms())
      for (const auto& [wb, cb] : b.terms()) s += ca * cb * f(wa, wb);
    return s;
  };
  auto prod_nf = [&](const Word& a, const Word& b) {
    return A.normal_form(NCPoly<F>::monomial(concat(a, b), F(1)));
  };
  auto check_triple = [&](const Word& x, const Word& y, const Word& z) -> bool {
    ++res.triples;
    auto dx = C.comultiply(NCPoly<F>::monomial(x, F(1)));
    auto dy = C.comultiply(NCPoly<F>::monomial(y, F(1)));
    auto dz = C.comultiply(NCPoly<F>::monomial(z, F(1)));
    auto px = NCPoly<F>::monomial(x, F(1)), pz = NCPoly<F>::monomial(z, F(1));
    F l1, r1, l2, r2;
    for (const auto& [kx, cx] : dx.terms())
      for (const auto& [ky, cy] : dy.terms()) {
        F c = cx * cy;
        l1 += c * sigma(kx.first, ky.first) * form_on(sigma, prod_nf(kx.second, ky.second), pz);
        l2 += c * form_on(sigma_inv, prod_nf(kx.first, ky.first), pz) * sigma_inv(kx.second, ky.second);
      }
    for (const auto& [ky, cy] : dy.terms())
      for (const auto& [kz, cz] : dz.terms()) {
        F c = cy * cz;
        r1 += c * sigma(ky.first, kz.first) * form_on(sigma, px, prod_nf(ky.second, kz.second));
        r2 += c * form_on(sigma_inv, px, prod_nf(ky.first, kz.first)) * sigma_inv(ky.second, kz.second);
      }
    auto describe = [&](const char* what) {
      res.ok = false;
      res.failure = std::string(what) + " fails on a triple of degrees " + std::to_string(x.size()) + "," +
                    std::to_string(y.size()) + "," + std::to_string(z.size());
      return false;
    };
    if (!(l1 == r1)) return describe("cocycle identity");
    if (!(l2 == r2)) return describe("inverse cocycle identity");
    // Unit and convolution-inverse conditions on the pair (x, y).
    F ex = C.counit(px), ey = C.counit(NCPoly<F>::monomial(y, F(1)));
    if (!(sigma(x, Word{}) == ex) || !(sigma(Word{}, x) == ex)) return describe("unit condition");
    if (!(sigma_inv(x, Word{}) == ex) || !(sigma_inv(Word{}, x) == ex)) return describe("inverse unit condition");
    F conv1, conv2;
    for (const auto& [kx, cx] : dx.terms())
      for (const auto& [ky, cy] : dy.terms()) {
        conv1 += cx * cy * sigma(kx.first, ky.first) * sigma_inv(kx.second, ky.second);
        conv2 += cx * cy * sigma_inv(kx.first, ky.first) * sigma(kx.second, ky.second);
      }
    if (!(conv1 == ex * ey) || !(conv2 == ex * ey)) return describe("convolution inverse");
    return true;
  };

  std::vector<Word> words{Word{}};
  for (int d = 1; d <= opt.exhaustive_degree; ++d) {
    std::vector<Word> next;
    for (const auto& w : words)
      if (static_cast<int>(w.size()) == d - 1)
        for (std::size_t g = 0; g < A.m(); ++g) {
          Word v = w;
          v.push_back(static_cast<std::uint16_t>(g));
          next.push_back(v);
        }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& x : words)
    for (const auto& y : words)
      for (const auto& z : words)
        if (!check_triple(x, y, z)) return res;

  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> gen(0, A.m() - 1);
  auto random_word = [&]() {
    Word w;
    for (int i = 0; i < opt.random_degree; ++i) w.push_back(static_cast<std::uint16_t>(gen(rng)));
    return w;
  };
  for (int t = 0; t < opt.random_triples; ++t) {
    Word x = random_word(), y = random_word(), z = random_word();
    if (!check_triple(x, y, z)) return res;
  }
  return res;
}

}  // namespace qtwist
