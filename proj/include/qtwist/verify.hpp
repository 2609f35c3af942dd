#pragma once

// Named invariant checks shared by the acceptance runner and `verify-suite`.

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qtwist/random.hpp"
#include "qtwist/twist.hpp"

namespace qtwist::verify {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::size_t cases = 0;
  std::string detail;  // first failure, empty on success
  double seconds = 0;
};

namespace detail {

using F = RatFunc;

inline bool fail(CheckResult& r, std::string why) {
  if (r.pass) r.detail = std::move(why);
  r.pass = false;
  return false;
}

inline CheckResult timed(const std::string& name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    fail(r, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline F q_of(QCase c) {
  switch (c) {
    case QCase::One: return F(1);
    case QCase::MinusOne: return F(-1);
    case QCase::Generic: return F::q();
  }
  return F::q();
}

inline QCase case_at(std::size_t i) { return static_cast<QCase>(i % 3); }

template <Field G>
std::string matrix_text(const Matrix<G>& M) {
  std::string s = "[";
  for (std::size_t i = 0; i < M.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < M.cols(); ++j) s += (j ? ", " : "") + to_string(M(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace detail

/// R_q solves the QYBE: n=2,3 symbolic, n=4 at q = 2 and 5/3.
inline CheckResult qybe_classical() {
  return detail::timed("qybe_classical", [](CheckResult& r) {
    for (int n : {2, 3}) {
      ++r.cases;
      if (!qybe_residual(classical_rq(n, RatFunc::q())).is_zero())
        detail::fail(r, "nonzero residual at n=" + std::to_string(n));
    }
    for (const Rational& q : {Rational(2), Rational(5, 3)}) {
      ++r.cases;
      if (!qybe_residual(classical_rq(4, q)).is_zero()) detail::fail(r, "nonzero residual at n=4, q=" + to_string(q));
    }
  });
}

/// twist_r(R_q, pair) solves the QYBE for random admissible pairs in every q-case.
inline CheckResult qybe_twisted(std::uint64_t seed, std::size_t per_case = 20) {
  return detail::timed("qybe_twisted", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t c = 0; c < 3; ++c) {
      const QCase qc = detail::case_at(c);
      for (std::size_t t = 0; t < per_case; ++t) {
        const int n = 2 + static_cast<int>(t % 2);
        auto R = classical_rq(n, detail::q_of(qc));
        auto alpha = sample_twisting_alpha<RatFunc>(qc, n, rng);
        ++r.cases;
        if (!qybe_residual(twist_r(R, TwistingPair<RatFunc>(R, alpha))).is_zero())
          detail::fail(r, to_string(qc) + " case, n=" + std::to_string(n) + ", alpha=" + detail::matrix_text(alpha));
      }
    }
  });
}

/// Closed forms of the twisted R_q agree with the general contraction.
inline CheckResult closed_form_oracle(std::uint64_t seed, std::size_t specs = 50) {
  return detail::timed("closed_form_oracle", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < specs; ++t) {
      const QCase qc = detail::case_at(t);
      const int n = 2 + static_cast<int>((t / 3) % 2);
      auto R = classical_rq(n, detail::q_of(qc));
      TwistingPair<RatFunc> pair(R, sample_twisting_alpha<RatFunc>(qc, n, rng));
      ++r.cases;
      if (!(twist_rq_closed_form(TwistSpec<RatFunc>{R, pair, qc}) == twist_r(R, pair)))
        detail::fail(r, to_string(qc) + " case, alpha=" + detail::matrix_text(pair.alpha()));
    }
  });
}

/// frt_relations(R_q) spans the O_q(M_n) relations, n = 2, 3.
inline CheckResult frt_oq_identification() {
  return detail::timed("frt_oq_identification", [](CheckResult& r) {
    for (int n : {2, 3}) {
      ++r.cases;
      const auto q = RatFunc::q();
      if (!relation_span_equal(frt_relations(classical_rq(n, q)), oq_matrix_relations(n, q)))
        detail::fail(r, "relation spans differ at n=" + std::to_string(n));
    }
  });
}

/// dim O_q(M_2)_d = 1, 4, 10, 20 for d = 0..3.
inline CheckResult hilbert_oq_m2() {
  return detail::timed("hilbert_oq_m2", [](CheckResult& r) {
    const auto dims = hilbert_dims(oq_matrix_relations(2, RatFunc::q()), 3);
    const std::vector<std::size_t> expect{1, 4, 10, 20};
    r.cases = expect.size();
    if (dims != expect) {
      std::string got;
      for (auto d : dims) got += (got.empty() ? "" : ",") + std::to_string(d);
      detail::fail(r, "dimensions " + got);
    }
  });
}

/// The q-determinant is central and group-like; its first term alone is not.
inline CheckResult qdet_grouplike_central() {
  return detail::timed("qdet_grouplike_central", [](CheckResult& r) {
    {
      const auto q = RatFunc::q();
      auto A = oq_matrix_relations(2, q);
      MatrixCoalgebra C{2, false};
      auto g = q_determinant(2, q);
      r.cases += 2;
      if (!is_grouplike_central(g, A, C)) detail::fail(r, "n=2 symbolic q-determinant rejected");
      // First term of the signed sum: the identity permutation, x11 x22.
      auto mutant = NCPoly<RatFunc>::monomial(
          Word{static_cast<std::uint16_t>(tgen(2, 1, 1)), static_cast<std::uint16_t>(tgen(2, 2, 2))}, RatFunc(1));
      if (is_grouplike_central(mutant, A, C)) detail::fail(r, "mutant x11*x22 accepted");
    }
    for (const Rational& q : {Rational(2), Rational(5, 3)}) {
      auto A = oq_matrix_relations(3, q);
      MatrixCoalgebra C{3, false};
      ++r.cases;
      if (!is_grouplike_central(q_determinant(3, q), A, C))
        detail::fail(r, "n=3 q-determinant rejected at q=" + to_string(q));
    }
  });
}

/// 2-cocycle identities of σ from random diagonal pairs at n = 2, symbolic q.
inline CheckResult cocycle_identities(std::uint64_t seed, std::size_t pairs = 10, int random_triples = 200) {
  return detail::timed("cocycle_identities", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const auto q = RatFunc::q();
    auto R = classical_rq(2, q);
    auto A = frt_relations(R);
    MatrixCoalgebra C{2, false};
    for (std::size_t t = 0; t < pairs; ++t) {
      TwistingPair<RatFunc> pair(R, sample_twisting_alpha<RatFunc>(QCase::Generic, 2, rng));
      CocycleCheckOptions opt;
      opt.exhaustive_degree = 1;
      opt.random_degree = 2;
      opt.random_triples = random_triples;
      opt.seed = seed + t;
      auto res = check_cocycle_identity(A, C, sigma_form(pair, q), sigma_inverse_form(pair, q), opt);
      r.cases += res.triples;
      if (!res.ok) detail::fail(r, res.failure + ", alpha=" + detail::matrix_text(pair.alpha()));
    }
  });
}

/// Random x_{i1 j1}^{p1}⋯ g^{-r}; diagonal factors are favoured so that ε(x) ≠ 0 occurs often.
inline LaurentMonomial random_laurent_monomial(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n), pw(0, 2), len(0, 3), gr(0, 2);
  std::bernoulli_distribution diag(0.7);
  LaurentMonomial x;
  const int s = len(rng);
  for (int k = 0; k < s; ++k) {
    int i = idx(rng), j = diag(rng) ? i : idx(rng);
    x.factors.push_back({i, j, pw(rng)});
  }
  x.r = gr(rng);
  return x;
}

/// σ agrees with its closed form on random Laurent monomials.
template <Field G>
CheckResult cocycle_closed_form_check(std::uint64_t seed, const G& q, QCase qc, std::size_t samples = 100,
                                      const std::string& name = "cocycle_closed_form") {
  return detail::timed(name, [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const int n = 2;
    auto R = classical_rq(n, q);
    for (std::size_t t = 0; t < samples; ++t) {
      TwistingPair<G> pair(R, sample_twisting_alpha<G>(qc, n, rng));
      auto x = random_laurent_monomial(n, rng), y = random_laurent_monomial(n, rng);
      ++r.cases;
      G direct = cocycle_sigma(pair, q, x.to_element<G>(n), y.to_element<G>(n));
      G closed = cocycle_closed_form(pair, qc, x, y);
      if (!(direct == closed))
        detail::fail(r, "sigma " + to_string(direct) + " vs closed form " + to_string(closed));
    }
  });
}

/// Group law, winding identities and (P1)-(P4) on generators.
inline CheckResult pair_structure(std::uint64_t seed, std::size_t pairs = 10) {
  return detail::timed("pair_structure", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < pairs; ++t) {
      const QCase qc = detail::case_at(t);
      const int n = 2 + static_cast<int>((t / 3) % 2);
      auto R = classical_rq(n, detail::q_of(qc));
      auto A = frt_relations(R);
      MatrixCoalgebra C{n, false};
      TwistingPair<RatFunc> pair(R, sample_twisting_alpha<RatFunc>(qc, n, rng));
      auto other = sample_twisting_alpha<RatFunc>(qc, n, rng);
      const std::string tag = to_string(qc) + " case, alpha=" + detail::matrix_text(pair.alpha());
      ++r.cases;

      if (!check_twisting_pair(A, pair.alpha() * other)) detail::fail(r, "product not admissible: " + tag);
      if (!check_twisting_pair(A, pair.beta())) detail::fail(r, "inverse not admissible: " + tag);
      // φ1, φ2 are graded automorphisms of A(R).
      try {
        GradedAut<RatFunc>(A, phi_matrix(pair, PhiWhich::Phi1));
        GradedAut<RatFunc>(A, phi_matrix(pair, PhiWhich::Phi2));
      } catch (const NotAnAutomorphism&) {
        detail::fail(r, "phi does not preserve the relations: " + tag);
      }

      const auto pi1 = pair.pi1(), pi2 = pair.pi2();
      const auto eps = C.counit_values<RatFunc>();
      auto phi1 = [&](const NCPoly<RatFunc>& p) { return apply_phi(pair, PhiWhich::Phi1, 1, p); };
      auto phi2 = [&](const NCPoly<RatFunc>& p) { return apply_phi(pair, PhiWhich::Phi2, 1, p); };
      auto ident = [](const NCPoly<RatFunc>& p) { return p; };
      for (std::size_t g = 0; g < A.m(); ++g) {
        auto x = NCPoly<RatFunc>::generator(g);
        if (!(phi1(x) == winding(A, C, pi1, Side::Right, x))) detail::fail(r, "phi1 != right winding: " + tag);
        if (!(phi2(x) == winding(A, C, pi2, Side::Left, x))) detail::fail(r, "phi2 != left winding: " + tag);
        if (!(phi1(phi2(x)).evaluate(eps) == x.evaluate(eps))) detail::fail(r, "(P2) fails: " + tag);
        const auto dx = C.comultiply(x);
        if (!(C.comultiply(phi1(x)) == dx.apply_each(ident, phi1))) detail::fail(r, "(P1) fails for phi1: " + tag);
        if (!(C.comultiply(phi2(x)) == dx.apply_each(phi2, ident))) detail::fail(r, "(P1) fails for phi2: " + tag);
        if (!(dx.apply_each(phi1, phi2) == dx)) detail::fail(r, "(P4) fails: " + tag);
      }
      for (std::size_t a = 0; a < A.m(); ++a)
        for (std::size_t b = 0; b < A.m(); ++b) {
          auto w = NCPoly<RatFunc>::monomial(Word{static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b)}, RatFunc(1));
          if (!(phi1(phi2(w)) == phi2(phi1(w)))) detail::fail(r, "(P3) fails: " + tag);
        }
    }
  });
}

/// Koszul double dual, twist-of-dual, bullet-twist and the Manin twist-end equality.
inline CheckResult quadratic_theorems(std::uint64_t seed, std::size_t instances = 20) {
  return detail::timed("quadratic_theorems", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> msize(2, 3);
    for (std::size_t t = 0; t < instances; ++t) {
      auto [A, phi] = random_algebra_with_aut<RatFunc>(msize(rng), rng);
      auto [B, psi] = random_algebra_with_aut<RatFunc>(2, rng);
      r.cases += 4;

      if (!relation_span_equal(koszul_dual(koszul_dual(A)), A)) detail::fail(r, "double dual differs");

      // (A^φ)! = (A!)^{(φ⁻¹)^!}
      auto lhs = koszul_dual(zhang_twist_relations(A, phi));
      auto rhs = zhang_twist_relations(koszul_dual(A), dual_automorphism(A, phi.inverse()));
      if (!relation_span_equal(lhs, rhs)) detail::fail(r, "twist-of-dual differs");

      auto twisted_bullet = bullet(zhang_twist_relations(A, phi), zhang_twist_relations(B, psi));
      GradedAut<RatFunc> prod(bullet(A, B), kronecker(phi.matrix(), psi.matrix()));
      if (!relation_span_equal(twisted_bullet, zhang_twist_relations(bullet(A, B), prod)))
        detail::fail(r, "bullet-twist differs");

      auto E = manin_end(A);
      auto pr = manin_twisting_pair(A, phi);
      auto both = compose(pr.phi1, pr.phi2);
      auto via_end = zhang_twist_relations(E.algebra, GradedAut<RatFunc>(E.algebra, both.matrix()));
      if (!relation_span_equal(manin_end(zhang_twist_relations(A, phi)).algebra, via_end))
        detail::fail(r, "Manin twist-end differs");
    }
  });
}

/// Zhang twist of A(R_q) by φ1∘φ2 equals A(twist_r(R_q)), n = 2, random diagonal pairs.
inline CheckResult envelope_twist_compat(std::uint64_t seed, std::size_t pairs = 10) {
  return detail::timed("envelope_twist_compat", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    auto R = classical_rq(2, RatFunc::q());
    auto A = frt_relations(R);
    for (std::size_t t = 0; t < pairs; ++t) {
      TwistingPair<RatFunc> pair(R, sample_twisting_alpha<RatFunc>(QCase::Generic, 2, rng));
      ++r.cases;
      auto lhs = zhang_twist_relations(A, composite_automorphism(A, pair));
      if (!relation_span_equal(lhs, frt_relations(twist_r(R, pair))))
        detail::fail(r, "relation spans differ, alpha=" + detail::matrix_text(pair.alpha()));
    }
  });
}

/// Δ(R) ⊆ R⊗F + F⊗R and ε(R) = 0 for A(R_q) and A(R^σ).
inline CheckResult bi_ideal(std::uint64_t seed, std::size_t twisted = 5) {
  return detail::timed("bi_ideal", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    auto R = classical_rq(2, RatFunc::q());
    MatrixCoalgebra C{2, false};
    ++r.cases;
    if (!is_bi_ideal(frt_relations(R), C)) detail::fail(r, "A(R_q) relations are not a bi-ideal");
    for (std::size_t t = 0; t < twisted; ++t) {
      const QCase qc = detail::case_at(t);
      auto Rc = classical_rq(2, detail::q_of(qc));
      auto Rs = twist_r(Rc, TwistingPair<RatFunc>(Rc, sample_twisting_alpha<RatFunc>(qc, 2, rng)));
      ++r.cases;
      if (!is_bi_ideal(frt_relations(Rs), C)) detail::fail(r, "twisted solution gives no bi-ideal");
    }
  });
}

/// θ^σ on generators equals θ built from twist_r(R).
inline CheckResult theta_transfer(std::uint64_t seed, std::size_t pairs = 6) {
  return detail::timed("theta_transfer", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < pairs; ++t) {
      const QCase qc = detail::case_at(t);
      const int n = 2;
      auto R = classical_rq(n, detail::q_of(qc));
      TwistingPair<RatFunc> pair(R, sample_twisting_alpha<RatFunc>(qc, n, rng));
      auto Rs = twist_r(R, pair);
      for (int k = 1; k <= n; ++k)
        for (int u = 1; u <= n; ++u)
          for (int l = 1; l <= n; ++l)
            for (int v = 1; v <= n; ++v) {
              ++r.cases;
              if (!(theta_twisted(R, pair, k, u, l, v) == theta_on_generators(Rs, k, u, l, v)))
                detail::fail(r, to_string(qc) + " case, alpha=" + detail::matrix_text(pair.alpha()));
            }
    }
  });
}

/// twist_r(twist_r(R, α), α') = twist_r(R, α·α').
inline CheckResult twist_group_action(std::uint64_t seed, std::size_t pairs = 9) {
  return detail::timed("twist_group_action", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < pairs; ++t) {
      const QCase qc = detail::case_at(t);
      const int n = 2 + static_cast<int>((t / 3) % 2);
      auto R = classical_rq(n, detail::q_of(qc));
      TwistingPair<RatFunc> a(R, sample_twisting_alpha<RatFunc>(qc, n, rng));
      auto Ra = twist_r(R, a);
      // α' must be admissible for both R and the twisted solution; scalars always are.
      auto A1 = frt_relations(R), A2 = frt_relations(Ra);
      Matrix<RatFunc> next = Matrix<RatFunc>::identity(static_cast<std::size_t>(n)).map(
          [](const RatFunc& x) { return x * RatFunc(2); });
      for (int attempt = 0; attempt < 30; ++attempt) {
        auto cand = sample_twisting_alpha<RatFunc>(detail::case_at(static_cast<std::size_t>(attempt)), n, rng);
        if (check_twisting_pair(A1, cand) && check_twisting_pair(A2, cand)) {
          next = cand;
          break;
        }
      }
      TwistingPair<RatFunc> b(Ra, next);
      ++r.cases;
      if (!(twist_r(Ra, b) == twist_r(R, a * b))) detail::fail(r, to_string(qc) + " case composite differs");
    }
  });
}

/// The family validator agrees with check_twisting_pair on members and non-members.
inline CheckResult family_validator(std::uint64_t seed, std::size_t samples = 50) {
  return detail::timed("family_validator", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    const Rational q_generic(2);
    for (std::size_t t = 0; t < samples; ++t) {
      const QCase qc = detail::case_at(t);
      const int n = 2 + static_cast<int>((t / 3) % 2);
      const Rational q = qc == QCase::One ? Rational(1) : qc == QCase::MinusOne ? Rational(-1) : q_generic;
      auto A = frt_relations(classical_rq(n, q));
      for (bool member : {true, false}) {
        auto alpha = member ? sample_twisting_alpha<Rational>(qc, n, rng) : sample_non_member<Rational>(qc, n, rng);
        r.cases++;
        if (twisting_family_admits(qc, alpha) != check_twisting_pair(A, alpha))
          detail::fail(r, to_string(qc) + " case disagreement on " + detail::matrix_text(alpha));
      }
    }
  });
}

/// Zhang twists keep the Hilbert function (degrees ≤ 4).
inline CheckResult zhang_hilbert(std::uint64_t seed, std::size_t instances = 6) {
  return detail::timed("zhang_hilbert", [=](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < instances; ++t) {
      auto [A, phi] = random_algebra_with_aut<Rational>(2 + t % 2, rng);
      ++r.cases;
      if (hilbert_dims(A, 4) != hilbert_dims(zhang_twist_relations(A, phi), 4))
        detail::fail(r, "Hilbert function changed under a Zhang twist");
    }
  });
}

/// The full named suite in fixed order.
inline std::vector<CheckResult> run_suite(std::uint64_t seed) {
  std::vector<CheckResult> out;
  out.push_back(qybe_classical());
  out.push_back(qybe_twisted(seed));
  out.push_back(closed_form_oracle(seed));
  out.push_back(frt_oq_identification());
  out.push_back(hilbert_oq_m2());
  out.push_back(qdet_grouplike_central());
  out.push_back(cocycle_identities(seed));
  out.push_back(cocycle_closed_form_check(seed, RatFunc::q(), QCase::Generic));
  out.push_back(pair_structure(seed));
  out.push_back(quadratic_theorems(seed));
  out.push_back(envelope_twist_compat(seed));
  out.push_back(bi_ideal(seed));
  out.push_back(theta_transfer(seed));
  out.push_back(twist_group_action(seed));
  out.push_back(family_validator(seed));
  out.push_back(zhang_hilbert(seed));
  return out;
}

}  // namespace qtwist::verify
