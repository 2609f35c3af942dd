#include <random>

#include "catch_amalgamated.hpp"
#include "qtwist/random.hpp"
#include "qtwist/twist.hpp"

using namespace qtwist;

namespace {

using Q = Rational;

RatFunc q() { return RatFunc::q(); }

// Dense contraction (R^σ)^{kl}_{ij} = Σ_{p,v} α(p,i) R^{kv}_{pj} β(l,v), looping over every index.
template <Field F>
EndTensor<F> dense_twist(const EndTensor<F>& R, const Matrix<F>& a) {
  const int n = R.n();
  const Matrix<F> b = a.inverse();
  EndTensor<F> out(n);
  for (int k = 1; k <= n; ++k)
    for (int l = 1; l <= n; ++l)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          F s;
          for (int p = 1; p <= n; ++p)
            for (int v = 1; v <= n; ++v) s += a(p - 1, i - 1) * R.get({k, v, p, j}) * b(l - 1, v - 1);
          out.set({k, l, i, j}, s);
        }
  return out;
}

template <Field F>
Matrix<F> lift(const Matrix<Q>& m) {
  return lift_matrix<F>(m);
}

}  // namespace

TEST_CASE("classical R_q entries") {
  auto R = classical_rq(2, q());
  CHECK(R.nonzero_count() == 5);
  CHECK(R.get({1, 1, 1, 1}) == q());
  CHECK(R.get({2, 2, 2, 2}) == q());
  CHECK(R.get({1, 2, 1, 2}) == RatFunc(1));
  CHECK(R.get({2, 1, 2, 1}) == RatFunc(1));
  CHECK(R.get({1, 2, 2, 1}) == q() - q().inverse());
  CHECK(R.get({2, 1, 1, 2}).is_zero());
  for (int n : {1, 2, 3, 5}) CHECK(classical_rq(n, Q(1)) == EndTensor<Q>::identity(n));
  CHECK_THROWS_AS(classical_rq(2, Q(0)), ZeroParameter);
  CHECK_THROWS_AS(classical_rq(9, Q(2)), IndexOutOfRange);
  CHECK(classical_parameter(classical_rq(3, Q(5, 3))) == Q(5, 3));
  CHECK_FALSE(classical_parameter(flip<Q>(2)).has_value());
}

TEST_CASE("twist_r examples") {
  auto R1 = classical_rq(2, Q(1));
  TwistingPair<Q> u(R1, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}});
  auto Rs = twist_r(R1, u);
  CHECK(Rs.get({1, 1, 1, 2}) == Q(-1));
  for (int k = 1; k <= 2; ++k)
    for (int l = 1; l <= 2; ++l)
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) CHECK(Rs.get({k, l, i, j}) == u.alpha()(k - 1, i - 1) * u.beta()(l - 1, j - 1));

  auto Rq = classical_rq(2, q());
  CHECK(twist_r(Rq, TwistingPair<RatFunc>(Rq, Matrix<RatFunc>::identity(2))) == Rq);
  const RatFunc a(3), b(-5);
  auto Rd = twist_r(Rq, TwistingPair<RatFunc>(Rq, Matrix<RatFunc>::diagonal({a, b})));
  // The cross term carries α(2,2)/α(2,2); the (1,2) diagonal entries pick up a/b and b/a.
  CHECK(Rd.get({1, 2, 2, 1}) == q() - q().inverse());
  CHECK(Rd.get({1, 2, 1, 2}) == a / b);
  CHECK(Rd.get({2, 1, 2, 1}) == b / a);
  CHECK(Rd.get({1, 1, 1, 1}) == q());

  CHECK_THROWS_AS(twist_r(classical_rq(3, Q(2)), TwistingPair<Q>::unchecked(Matrix<Q>::identity(2))), InvalidPair);
  CHECK_THROWS_AS(twist_r(classical_rq(2, Q(2)), TwistingPair<Q>::unchecked(Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}})),
                  InvalidPair);
}

TEST_CASE("twist_r agrees with the dense contraction") {
  std::mt19937_64 rng(GENERATE(1u, 2u, 3u));
  for (auto [c, qv] : {std::pair{QCase::One, Q(1)}, std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(7, 2)}}) {
    for (int n : {2, 3}) {
      auto R = classical_rq(n, qv);
      TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(c, n, rng));
      CHECK(twist_r(R, pair) == dense_twist(R, pair.alpha()));
    }
  }
}

TEST_CASE("twisted R_q solves the QYBE") {
  std::mt19937_64 rng(GENERATE(4u, 5u));
  for (QCase c : {QCase::One, QCase::MinusOne, QCase::Generic}) {
    const RatFunc qv = c == QCase::One ? RatFunc(1) : c == QCase::MinusOne ? RatFunc(-1) : q();
    for (int n : {2, 3}) {
      auto R = classical_rq(n, qv);
      TwistingPair<RatFunc> pair(R, sample_twisting_alpha<RatFunc>(c, n, rng));
      CHECK(is_qybe_solution(twist_r(R, pair)));
    }
  }
}

TEST_CASE("twisted R_q solves the QYBE at n = 4") {
  std::mt19937_64 rng(6);
  for (Q qv : {Q(2), Q(5, 3)}) {
    auto R = classical_rq(4, qv);
    TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(QCase::Generic, 4, rng));
    auto Rs = twist_r(R, pair);
    CHECK(is_qybe_solution(Rs));
    CHECK_FALSE(Rs == R);
  }
}

TEST_CASE("closed forms") {
  auto Rq = classical_rq(2, q());
  auto id = TwistSpec<RatFunc>{Rq, TwistingPair<RatFunc>(Rq, Matrix<RatFunc>::identity(2)), QCase::Generic};
  CHECK(twist_rq_closed_form(id) == Rq);

  auto R1 = classical_rq(2, Q(1));
  TwistingPair<Q> u(R1, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}});
  CHECK(twist_rq_closed_form(TwistSpec<Q>{R1, u, QCase::One}) == twist_r(R1, u));

  auto Rm = classical_rq(2, Q(-1));
  TwistingPair<Q> s(Rm, Matrix<Q>{{Q(0), Q(1)}, {Q(1), Q(0)}});
  auto cf = twist_rq_closed_form(TwistSpec<Q>{Rm, s, std::nullopt});
  CHECK(cf == twist_r(Rm, s));
  // τ = (12): the only entries are (k,l,i,j) = (τ⁻¹(i), τ(j), i, j), negative when k = j.
  CHECK(cf.nonzero_count() == 4);
  CHECK(cf.get({2, 2, 1, 1}) == Q(1));
  CHECK(cf.get({2, 1, 1, 2}) == Q(-1));
  CHECK(cf.get({1, 2, 2, 1}) == Q(-1));
  CHECK(cf.get({1, 1, 2, 2}) == Q(1));
}

TEST_CASE("closed forms match twist_r on random specs") {
  std::mt19937_64 rng(GENERATE(7u, 8u, 9u));
  for (auto [c, qv] : {std::pair{QCase::One, Q(1)}, std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(-3)}}) {
    for (int n : {2, 3, 4}) {
      auto R = classical_rq(n, qv);
      TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(c, n, rng));
      CHECK(twist_rq_closed_form(TwistSpec<Q>{R, pair, c}) == twist_r(R, pair));
    }
  }
  // Symbolic q in the generic case.
  auto Rq = classical_rq(3, q());
  TwistingPair<RatFunc> pair(Rq, sample_twisting_alpha<RatFunc>(QCase::Generic, 3, rng));
  CHECK(twist_rq_closed_form(TwistSpec<RatFunc>{Rq, pair, QCase::Generic}) == twist_r(Rq, pair));
}

TEST_CASE("q = 1 twists are rank-one products") {
  std::mt19937_64 rng(10);
  auto R = classical_rq(3, Q(1));
  for (int t = 0; t < 5; ++t) {
    auto a = detail::random_invertible<Q>(3, rng);
    auto Rs = twist_rq_closed_form(TwistSpec<Q>{R, TwistingPair<Q>(R, a), QCase::One});
    auto b = a.inverse();
    for (const auto& [key, v] : Rs.entries()) {
      auto [k, l, i, j] = EndTensor<Q>::unpack(key);
      CHECK(v == a(k - 1, i - 1) * b(l - 1, j - 1));
    }
  }
}

TEST_CASE("closed form case checks") {
  auto R2 = classical_rq(2, Q(2));
  TwistingPair<Q> d(R2, Matrix<Q>::diagonal({Q(2), Q(3)}));
  CHECK_THROWS_AS(twist_rq_closed_form(TwistSpec<Q>{R2, d, QCase::One}), CaseMismatch);
  CHECK_THROWS_AS(twist_rq_closed_form(TwistSpec<Q>{flip<Q>(2), d, std::nullopt}), CaseMismatch);
  auto R1 = classical_rq(2, Q(1));
  TwistingPair<Q> u(R1, Matrix<Q>{{Q(1), Q(1)}, {Q(0), Q(1)}});
  // Admissible for q = 1 but outside the generic family.
  CHECK_THROWS_AS(twist_rq_closed_form(TwistSpec<Q>{R2, u, QCase::Generic}), CaseMismatch);
  CHECK(qcase_of(Q(1)) == QCase::One);
  CHECK(qcase_of(Q(-1)) == QCase::MinusOne);
  CHECK(qcase_of(q()) == QCase::Generic);
}

TEST_CASE("twisting composes as a group action") {
  // The second pair must also be admissible for the twisted operator.
  std::mt19937_64 rng(11);
  int composed = 0;
  for (auto [c, qv] : {std::pair{QCase::One, Q(1)}, std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(2)}}) {
    auto R = classical_rq(3, qv);
    for (int t = 0; t < 4; ++t) {
      TwistingPair<Q> a(R, sample_twisting_alpha<Q>(c, 3, rng));
      auto Rs = twist_r(R, a);
      for (QCase family : {QCase::Generic, QCase::MinusOne, c}) {
        auto b = sample_twisting_alpha<Q>(family, 3, rng);
        if (!check_twisting_pair(Rs, b)) continue;
        CHECK(twist_r(twist_r(R, a), TwistingPair<Q>(Rs, b)) == twist_r(R, a * TwistingPair<Q>::unchecked(b)));
        ++composed;
      }
    }
  }
  CHECK(composed >= 6);
}

TEST_CASE("theta on generators") {
  auto R = classical_rq(2, q());
  CHECK(theta_on_generators(R, 1, 1, 1, 1) == q());
  CHECK(theta_on_generators(R, 1, 2, 2, 1) == q() - q().inverse());
  CHECK(theta_on_generators(R, 1, 1, 2, 2) == RatFunc(1));
  auto one = NCPoly<RatFunc>(RatFunc(1));
  auto t11 = NCPoly<RatFunc>::generator(tgen(2, 1, 1)), t12 = NCPoly<RatFunc>::generator(tgen(2, 1, 2));
  CHECK(theta_on_generators(R, one, t11) == RatFunc(1));
  CHECK(theta_on_generators(R, t12, one) == RatFunc(0));
  CHECK_THROWS_AS(theta_on_generators(R, t11 * t11, t11), DimensionMismatch);
}

TEST_CASE("twisted theta is theta of the twisted operator") {
  std::mt19937_64 rng(GENERATE(12u, 13u));
  for (auto [c, qv] : {std::pair{QCase::One, Q(1)}, std::pair{QCase::MinusOne, Q(-1)}, std::pair{QCase::Generic, Q(2)}}) {
    const int n = 2;
    auto R = classical_rq(n, qv);
    TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(c, n, rng));
    auto Rs = twist_r(R, pair);
    for (int k = 1; k <= n; ++k)
      for (int u = 1; u <= n; ++u)
        for (int l = 1; l <= n; ++l)
          for (int v = 1; v <= n; ++v) CHECK(theta_twisted(R, pair, k, u, l, v) == Rs.get({k, l, u, v}));
    NCPoly<Q> one(Q(1));
    for (std::size_t g = 0; g < 4; ++g) {
      auto x = NCPoly<Q>::generator(g);
      CHECK(theta_twisted(R, pair, one, x) == MatrixCoalgebra{n, false}.counit(x));
      CHECK(theta_twisted(R, pair, x, one) == MatrixCoalgebra{n, false}.counit(x));
    }
  }
  auto R = classical_rq(2, Q(3));
  TwistingPair<Q> id(R, Matrix<Q>::identity(2));
  CHECK(theta_twisted(R, id, 1, 2, 2, 1) == theta_on_generators(R, 1, 2, 2, 1));
}

TEST_CASE("FRT algebra of a diagonal twist is the Zhang twist") {
  // Literal span equality; for non-diagonal pairs the two algebras are only isomorphic.
  std::mt19937_64 rng(14);
  for (Q qv : {Q(1), Q(-1), Q(2)}) {
    auto R = classical_rq(2, qv);
    auto A = frt_relations(R);
    for (int t = 0; t < 3; ++t) {
      TwistingPair<Q> pair(R, sample_twisting_alpha<Q>(QCase::Generic, 2, rng));
      CHECK(relation_span_equal(zhang_twist_relations(A, composite_automorphism(A, pair)),
                                frt_relations(twist_r(R, pair))));
    }
  }
  auto R = classical_rq(3, RatFunc::q());
  auto A = frt_relations(R);
  TwistingPair<RatFunc> pair(R, Matrix<RatFunc>::diagonal({RatFunc(2), RatFunc(-1), RatFunc(3)}));
  CHECK(relation_span_equal(zhang_twist_relations(A, composite_automorphism(A, pair)), frt_relations(twist_r(R, pair))));
}

TEST_CASE("specialisation commutes with twisting") {
  auto Rq = classical_rq(2, q());
  auto alpha = Matrix<Q>::diagonal({Q(2), Q(-1, 2)});
  auto sym = twist_r(Rq, TwistingPair<RatFunc>(Rq, lift<RatFunc>(alpha)));
  auto R3 = classical_rq(2, Q(3));
  CHECK(specialize(sym, Q(3)) == twist_r(R3, TwistingPair<Q>(R3, alpha)));
}
