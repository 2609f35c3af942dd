#include <random>

#include "catch_amalgamated.hpp"
#include "qtwist/random.hpp"
#include "qtwist/twist.hpp"

using namespace qtwist;

namespace {

using Q = Rational;
using P = NCPoly<Q>;
using PR = NCPoly<RatFunc>;

template <Field F>
NCPoly<F> t(int n, int i, int j) {
  return NCPoly<F>::generator(tgen(n, i, j));
}

// Pair of words with one letter each.
TensorPoly<Q> tt(int n, int a, int b, int c, int d) {
  TensorPoly<Q> r;
  r.add_term(Word{static_cast<std::uint16_t>(tgen(n, a, b))}, Word{static_cast<std::uint16_t>(tgen(n, c, d))}, Q(1));
  return r;
}

RatFunc q() { return RatFunc::q(); }

LaurentMonomial monomial(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, 2), pw(1, 2), len(0, 2), gr(0, 1);
  LaurentMonomial x;
  for (int k = len(rng); k > 0; --k) {
    int i = idx(rng);
    x.factors.push_back({i, rng() % 4 ? i : idx(rng), pw(rng)});
  }
  x.r = gr(rng);
  return x;
}

}  // namespace

TEST_CASE("FRT relations of trivial operators are the commutation relations") {
  // Identity and scalar R give t^k_a t^l_b = t^l_b t^k_a: the coordinate ring of M_n.
  for (int n : {2, 3}) {
    const auto comm = [&] {
      std::vector<P> rels;
      for (std::size_t a = 0; a < static_cast<std::size_t>(n * n); ++a)
        for (std::size_t b = a + 1; b < static_cast<std::size_t>(n * n); ++b)
          rels.push_back(P::generator(a) * P::generator(b) - P::generator(b) * P::generator(a));
      return QuadraticAlgebra<Q>::from_polys(frt_labels(n), rels);
    }();
    auto A = frt_relations(EndTensor<Q>::identity(n));
    CHECK(A.labels() == frt_labels(n));
    CHECK(relation_span_equal(A, comm));
    EndTensor<Q> scaled = EndTensor<Q>::identity(n).map([](const Q& v) { return v * Q(7); });
    CHECK(relation_span_equal(frt_relations(scaled), comm));
  }
}

TEST_CASE("FRT relations of R_q are the quantum matrix relations") {
  auto A = frt_relations(classical_rq(2, q()));
  CHECK(A.relation_count() == 6);
  CHECK(relation_span_equal(A, oq_matrix_relations(2, q())));
  CHECK(relation_span_equal(frt_relations(classical_rq(3, q())), oq_matrix_relations(3, q())));
  CHECK(relation_span_equal(frt_relations(classical_rq(3, Q(2))), oq_matrix_relations(3, Q(2))));
}

TEST_CASE("FRT convention regression") {
  CHECK(std::string(kFrtConvention) == "R T1 T2 = T2 T1 R, T_ij = t^j_i");
  // Both sides coincide for the flip, so it imposes nothing.
  CHECK(frt_relations(flip<Q>(2)).relation_count() == 0);
  // A non-symmetric solution pins the placement of R's indices.
  auto B = frt_relations(classical_rq(2, Q(3)));
  const Q c = Q(3) - Q(1, 3);
  auto y11 = t<Q>(2, 1, 1), y12 = t<Q>(2, 1, 2), y21 = t<Q>(2, 2, 1), y22 = t<Q>(2, 2, 2);
  CHECK(B.normal_form(Q(3) * y11 * y21 - y21 * y11).is_zero());
  CHECK(B.normal_form(Q(3) * y11 * y12 - y12 * y11).is_zero());
  CHECK(B.normal_form(y22 * y11 - y11 * y22 - c * y12 * y21).is_zero());
  CHECK_FALSE(B.normal_form(y11 * y21 - Q(3) * y21 * y11).is_zero());
  CHECK_FALSE(B.normal_form(y11 * y22 - y22 * y11 - c * y12 * y21).is_zero());
}

TEST_CASE("quantum matrix relations, n = 2") {
  auto A = oq_matrix_relations(2, q());
  auto x11 = t<RatFunc>(2, 1, 1), x12 = t<RatFunc>(2, 1, 2), x21 = t<RatFunc>(2, 2, 1), x22 = t<RatFunc>(2, 2, 2);
  std::vector<PR> expect{q() * x11 * x21 - x21 * x11,
                         q() * x11 * x12 - x12 * x11,
                         q() * x12 * x22 - x22 * x12,
                         q() * x21 * x22 - x22 * x21,
                         x21 * x12 - x12 * x21,
                         x22 * x11 - x11 * x22 - (q() - q().inverse()) * x12 * x21};
  CHECK(relation_span_equal(A, QuadraticAlgebra<RatFunc>::from_polys(A.labels(), expect)));
  CHECK(hilbert_dims(A, 3) == std::vector<std::size_t>{1, 4, 10, 20});
  CHECK(A.labels() == matrix_labels(2, "x"));
}

TEST_CASE("comultiplication and counit") {
  MatrixCoalgebra C{2, false};
  CHECK(C.comultiply(t<Q>(2, 1, 2)) == tt(2, 1, 1, 1, 2) + tt(2, 1, 2, 2, 2));
  TensorPoly<Q> one;
  one.add_term(Word{}, Word{}, Q(1));
  CHECK(C.comultiply(P(Q(1))) == one);
  CHECK(C.counit(t<Q>(2, 1, 1) * t<Q>(2, 2, 2)) == Q(1));
  CHECK(C.counit(t<Q>(2, 1, 2)) == Q(0));
  CHECK(C.counit(q_determinant(2, Q(5))) == Q(1));
  CHECK(MatrixCoalgebra{3, false}.counit(q_determinant(3, Q(5))) == Q(1));
  CHECK(MatrixCoalgebra{3, false}.counit(q_determinant(3, q())) == RatFunc(1));
}

TEST_CASE("counit axioms on generators") {
  const int n = 3;
  MatrixCoalgebra C{n, false};
  const auto eps = C.counit_values<Q>();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      auto d = C.comultiply(t<Q>(n, i, j));
      P left, right;
      for (const auto& [k, c] : d.terms()) {
        left += P::monomial(k.second, c * P::monomial(k.first, Q(1)).evaluate(eps));
        right += P::monomial(k.first, c * P::monomial(k.second, Q(1)).evaluate(eps));
      }
      CHECK(left == t<Q>(n, i, j));
      CHECK(right == t<Q>(n, i, j));
    }
}

TEST_CASE("relations form a bi-ideal") {
  CHECK(is_bi_ideal(frt_relations(classical_rq(2, q())), MatrixCoalgebra{2, false}));
  CHECK(is_bi_ideal(oq_matrix_relations(3, Q(2)), MatrixCoalgebra{3, false}));
  std::mt19937_64 rng(4);
  for (int k = 0; k < 5; ++k) {
    auto R = classical_rq(2, Q(1));
    TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(QCase::One, 2, rng));
    CHECK(is_bi_ideal(frt_relations(twist_r(R, pair)), MatrixCoalgebra{2, false}));
  }
  // A relation outside the FRT span is not a coideal.
  auto bad = QuadraticAlgebra<Q>::from_polys(frt_labels(2), {t<Q>(2, 1, 2) * t<Q>(2, 1, 2)});
  CHECK_FALSE(is_bi_ideal(bad, MatrixCoalgebra{2, false}));
}

TEST_CASE("twisting-pair admissibility") {
  auto R2 = classical_rq(2, Q(2));
  CHECK(check_twisting_pair(R2, Matrix<Q>::diagonal({Q(3), Q(5)})));
  CHECK_FALSE(check_twisting_pair(R2, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}}));
  CHECK_FALSE(check_twisting_pair(R2, Matrix<Q>{{Q(0), Q(1)}, {Q(1), Q(0)}}));
  CHECK_FALSE(check_twisting_pair(R2, Matrix<Q>{{Q(1), Q(0)}, {Q(0), Q(0)}}));
  CHECK(check_twisting_pair(classical_rq(2, Q(-1)), Matrix<Q>{{Q(0), Q(2)}, {Q(-3), Q(0)}}));
  std::mt19937_64 rng(12);
  for (int k = 0; k < 10; ++k)
    CHECK(check_twisting_pair(classical_rq(3, Q(1)), detail::random_invertible<Q>(3, rng)));
  CHECK(twisting_family_admits(QCase::Generic, Matrix<Q>::diagonal({Q(1), Q(2), Q(3)})));
  CHECK_FALSE(twisting_family_admits(QCase::Generic, Matrix<Q>{{Q(0), Q(1)}, {Q(1), Q(0)}}));

  try {
    TwistingPair<Q>(R2, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}});
    FAIL("expected InvalidPair");
  } catch (const InvalidPair& e) {
    CHECK(std::string(e.what()).find("relation #") != std::string::npos);
  }
  CHECK_THROWS_AS(TwistingPair<Q>(R2, Matrix<Q>{{Q(1), Q(2)}, {Q(2), Q(4)}}), InvalidPair);
  CHECK_THROWS_AS(TwistingPair<Q>(R2, Matrix<Q>::identity(3)), InvalidPair);
}

TEST_CASE("family validator agrees with substitution") {
  std::mt19937_64 rng(GENERATE(1u, 2u));
  const struct {
    QCase c;
    Q q;
  } cases[] = {{QCase::One, Q(1)}, {QCase::MinusOne, Q(-1)}, {QCase::Generic, Q(2)}};
  for (const auto& [c, qv] : cases)
    for (int n : {2, 3}) {
      auto A = frt_relations(classical_rq(n, qv));
      for (int k = 0; k < 10; ++k) {
        auto in = sample_twisting_alpha<Q>(c, n, rng);
        auto out = sample_non_member<Q>(c, n, rng);
        CHECK(twisting_family_admits(c, in));
        CHECK(check_twisting_pair(A, in));
        CHECK_FALSE(twisting_family_admits(c, out));
        CHECK_FALSE(check_twisting_pair(A, out));
      }
    }
}

TEST_CASE("pairs form a group") {
  std::mt19937_64 rng(3);
  for (auto [c, qv] : {std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(3)}}) {
    auto R = classical_rq(3, qv);
    for (int k = 0; k < 5; ++k) {
      TwistingPair<Q> a(R, sample_twisting_alpha<Q>(c, 3, rng)), b(R, sample_twisting_alpha<Q>(c, 3, rng));
      CHECK(check_twisting_pair(R, (a * b).alpha()));
      CHECK(check_twisting_pair(R, a.inverse().alpha()));
      CHECK(a.alpha() * a.beta() == Matrix<Q>::identity(3));
    }
  }
}

TEST_CASE("phi maps on generators") {
  auto R = classical_rq(2, Q(1));
  TwistingPair<Q> pair(R, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}});
  CHECK(apply_phi(pair, PhiWhich::Phi1, 1, t<Q>(2, 1, 1)) == t<Q>(2, 1, 1));
  CHECK(apply_phi(pair, PhiWhich::Phi1, 1, t<Q>(2, 1, 2)) == t<Q>(2, 1, 1) + t<Q>(2, 1, 2));
  CHECK(apply_phi(pair, PhiWhich::Phi2, 1, t<Q>(2, 1, 1)) == t<Q>(2, 1, 1) - t<Q>(2, 2, 1));
  CHECK(apply_phi(pair, PhiWhich::Phi1, -1, apply_phi(pair, PhiWhich::Phi1, 1, t<Q>(2, 1, 2))) == t<Q>(2, 1, 2));
  CHECK(apply_phi(pair, PhiWhich::Phi2, 0, t<Q>(2, 2, 1)) == t<Q>(2, 2, 1));
}

TEST_CASE("pair axioms and winding identities on random pairs") {
  std::mt19937_64 rng(GENERATE(5u, 6u));
  const int n = 2;
  for (auto [c, qv] : {std::pair{QCase::One, Q(1)}, std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(2)}}) {
    auto R = classical_rq(n, qv);
    auto A = frt_relations(R);
    MatrixCoalgebra C{n, false};
    TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(c, n, rng));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        P x = t<Q>(n, i, j);
        P p1 = apply_phi(pair, PhiWhich::Phi1, 1, x), p2 = apply_phi(pair, PhiWhich::Phi2, 1, x);
        CHECK(p1 == winding(A, C, pair.pi1(), Side::Right, x));
        CHECK(p2 == winding(A, C, pair.pi2(), Side::Left, x));
        CHECK(winding(A, C, C.counit_values<Q>(), Side::Right, x) == x);
        // (P2): ε∘φ1∘φ2 = ε
        CHECK(C.counit(apply_phi(pair, PhiWhich::Phi1, 1, p2)) == C.counit(x));
        // (P4): (φ1⊗φ2)Δ = Δ
        auto d = C.comultiply(x);
        TensorPoly<Q> moved;
        for (const auto& [k, cf] : d.terms())
          moved += TensorPoly<Q>::pure(apply_phi(pair, PhiWhich::Phi1, 1, P::monomial(k.first, cf)),
                                       apply_phi(pair, PhiWhich::Phi2, 1, P::monomial(k.second, Q(1))));
        CHECK(moved == d);
      }
    // (P3) on degree-2 monomials.
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) {
        P m = P::generator(a) * P::generator(b);
        CHECK(apply_phi(pair, PhiWhich::Phi1, 1, apply_phi(pair, PhiWhich::Phi2, 1, m)) ==
              apply_phi(pair, PhiWhich::Phi2, 1, apply_phi(pair, PhiWhich::Phi1, 1, m)));
      }
  }
}

TEST_CASE("winding rejects non-characters") {
  auto A = frt_relations(classical_rq(2, Q(2)));
  MatrixCoalgebra C{2, false};
  CHECK_THROWS_AS(winding(A, C, matrix_character(Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}}), Side::Left, t<Q>(2, 1, 1)),
                  NotACharacter);
  CHECK_THROWS_AS(winding(A, C, std::vector<Q>{Q(1)}, Side::Left, t<Q>(2, 1, 1)), NotACharacter);
}

TEST_CASE("cocycle examples") {
  using L = LaurentElement<Q>;
  auto R1 = classical_rq(2, Q(1));
  TwistingPair<Q> u(R1, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}});
  CHECK(cocycle_sigma(u, Q(1), L{t<Q>(2, 1, 1), 0}, L{t<Q>(2, 2, 1), 0}) == Q(0));
  CHECK(cocycle_sigma(u, Q(1), L{P(Q(1)), 0}, L{t<Q>(2, 1, 1), 0}) == Q(1));
  CHECK(cocycle_sigma(u, Q(1), L{P(Q(1)), 0}, L{t<Q>(2, 1, 2), 0}) == Q(0));
  CHECK(cocycle_sigma(u, Q(1), L{t<Q>(2, 1, 2), 0}, L{t<Q>(2, 1, 1), 0}) == Q(0));

  const Q a(3), b(-2);
  TwistingPair<Q> d(classical_rq(2, Q(5)), Matrix<Q>::diagonal({a, b}));
  CHECK(cocycle_sigma(d, Q(5), L{t<Q>(2, 1, 1), 0}, L{t<Q>(2, 1, 1), 0}) == a.inverse());
  CHECK(cocycle_sigma_inverse(d, Q(5), L{t<Q>(2, 1, 1), 0}, L{t<Q>(2, 1, 1), 0}) == a);
  // g^{-1} has degree -2, so σ(g^{-1}, t^1_1) = ε(φ2^{-2}(t^1_1)) = a².
  CHECK(cocycle_sigma(d, Q(5), L{P(Q(1)), 1}, L{t<Q>(2, 1, 1), 0}) == a * a);
  CHECK(g_factor(d, Q(5)) == a * b);
}

TEST_CASE("laurent elements compare after clearing g") {
  auto A = oq_matrix_relations(2, Q(2));
  auto g = q_determinant(2, Q(2));
  using L = LaurentElement<Q>;
  CHECK(laurent_equal(L{g, 1}, L{P(Q(1)), 0}, g, A));
  CHECK(laurent_equal(L{g * t<Q>(2, 1, 2), 1}, L{t<Q>(2, 1, 2), 0}, g, A));
  CHECK_FALSE(laurent_equal(L{g, 1}, L{P(Q(2)), 0}, g, A));
  CHECK(laurent_degree(L{t<Q>(2, 1, 2), 1}, 2) == -1);
}

TEST_CASE("cocycle identities hold and detect corruption") {
  auto check = [](const auto& R, const auto& alpha, const auto& qv, bool corrupt) {
    using F = std::decay_t<decltype(qv)>;
    TwistingPair<F> pair(R, alpha);
    auto A = frt_relations(R);
    MatrixCoalgebra C{R.n(), false};
    CocycleCheckOptions opt;
    opt.exhaustive_degree = 1;
    WordForm<F> sigma = sigma_form(pair, qv), inv = sigma_inverse_form(pair, qv);
    if (corrupt) {
      sigma = [pair, qv](const Word& x, const Word& y) {
        F ex = MatrixCoalgebra{pair.n(), false}.counit(NCPoly<F>::monomial(x, F(1)));
        return ex * MatrixCoalgebra{pair.n(), false}.counit(apply_phi(pair, PhiWhich::Phi2, 1, NCPoly<F>::monomial(y, F(1))));
      };
    }
    auto res = check_cocycle_identity(A, C, sigma, inv, opt);
    if (!corrupt) CHECK(res.triples == 125);
    return res.ok;
  };
  CHECK(check(classical_rq(2, q()), Matrix<RatFunc>::diagonal({RatFunc(2), RatFunc(-3)}), q(), false));
  CHECK(check(classical_rq(2, Q(1)), Matrix<Q>::identity(2), Q(1), false));
  CHECK(check(classical_rq(2, Q(1)), Matrix<Q>{{Q(1), Q(2)}, {Q(-1), Q(3)}}, Q(1), false));
  CHECK_FALSE(check(classical_rq(2, Q(1)), Matrix<Q>{{Q(1), Q(2)}, {Q(-1), Q(3)}}, Q(1), true));
}

TEST_CASE("cocycle closed form on Laurent monomials") {
  std::mt19937_64 rng(GENERATE(1u, 2u, 3u));
  for (auto [c, qv] : {std::pair{QCase::One, Q(1)}, std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(2)}}) {
    TwistingPair<Q> pair(classical_rq(2, qv), sample_twisting_alpha<Q>(c, 2, rng));
    for (int k = 0; k < 10; ++k) {
      auto x = monomial(rng), y = monomial(rng);
      CHECK(cocycle_sigma(pair, qv, x.to_element<Q>(2), y.to_element<Q>(2)) ==
            cocycle_closed_form(pair, c, x, y));
    }
  }
}

TEST_CASE("q-determinant") {
  CHECK(format_poly(q_determinant(2, q()), matrix_labels(2, "x")) == "x11*x22 - q^-1*x21*x12");
  CHECK(q_determinant(1, q()) == t<RatFunc>(1, 1, 1));
  CHECK(q_determinant(3, q()).size() == 6);
  CHECK(q_determinant(4, Q(2)).size() == 24);
  CHECK_THROWS_AS(q_determinant(5, Q(2)), IndexOutOfRange);
}

TEST_CASE("q-determinant is central and group-like") {
  MatrixCoalgebra C2{2, false};
  auto A = oq_matrix_relations(2, q());
  CHECK(is_grouplike_central(q_determinant(2, q()), A, C2));
  for (Q qv : {Q(2), Q(5, 3)})
    CHECK(is_grouplike_central(q_determinant(3, qv), oq_matrix_relations(3, qv), MatrixCoalgebra{3, false}));
  auto mutant = t<RatFunc>(2, 1, 1) * t<RatFunc>(2, 2, 2);
  auto rep = grouplike_central_report(mutant, A, C2);
  CHECK_FALSE(rep.ok());
  CHECK_FALSE(rep.central);
}

TEST_CASE("Manin end construction") {
  auto A = QuadraticAlgebra<Q>::from_polys({"x", "y"}, {P::generator(0) * P::generator(1) - P::generator(1) * P::generator(0)});
  auto E = manin_end(A);
  CHECK(E.algebra.m() == 4);
  CHECK(E.algebra.relation_count() == 3);
  CHECK(E.algebra.labels() == std::vector<std::string>{"z^1_1", "z^1_2", "z^2_1", "z^2_2"});
  // Δ(z^1_2) = z^1_2⊗z^1_1 + z^2_2⊗z^1_2
  auto z = [](int k, int j) { return static_cast<std::uint16_t>(tgen(2, k, j)); };
  TensorPoly<Q> expect;
  expect.add_term(Word{z(1, 2)}, Word{z(1, 1)}, Q(1));
  expect.add_term(Word{z(2, 2)}, Word{z(1, 2)}, Q(1));
  CHECK(E.coalgebra.comultiply(P::generator(z(1, 2))) == expect);
  CHECK(E.coalgebra.counit(P::generator(z(1, 1))) == Q(1));
  CHECK(E.coalgebra.counit(P::generator(z(2, 1))) == Q(0));
  CHECK(is_bi_ideal(E.algebra, E.coalgebra));
}

TEST_CASE("Manin twisting pair") {
  auto A = QuadraticAlgebra<Q>::from_polys({"x", "y"}, {P::generator(0) * P::generator(1) - P::generator(1) * P::generator(0)});
  auto E = manin_end(A);
  auto id = manin_twisting_pair(A, GradedAut<Q>::identity(2));
  CHECK(id.phi1.matrix() == Matrix<Q>::identity(4));
  CHECK(id.phi2.matrix() == Matrix<Q>::identity(4));

  const Q c(7);
  auto mp = manin_twisting_pair(A, GradedAut<Q>(A, Matrix<Q>::diagonal({Q(1), c})));
  for (int k = 1; k <= 2; ++k) {
    P zk2 = P::generator(tgen(2, k, 2));
    CHECK(mp.phi2.apply(zk2) == c * zk2);
  }
  std::mt19937_64 rng(9);
  for (int k = 0; k < 5; ++k) {
    auto [B, phi] = random_algebra_with_aut<Q>(2, rng);
    auto EB = manin_end(B);
    auto pair = manin_twisting_pair(B, phi);
    for (std::size_t g = 0; g < 4; ++g) {
      P zg = P::generator(g);
      CHECK(EB.coalgebra.counit(pair.phi1.apply(pair.phi2.apply(zg))) == EB.coalgebra.counit(zg));
      CHECK(pair.phi1.apply(pair.phi2.apply(zg)) == pair.phi2.apply(pair.phi1.apply(zg)));
    }
    auto lhs = manin_end(zhang_twist_relations(B, phi)).algebra;
    auto rhs = zhang_twist_relations(EB.algebra, compose(pair.phi1, pair.phi2));
    CHECK(relation_span_equal(lhs, rhs));
  }
  CHECK(E.algebra.relation_count() == 3);
}
