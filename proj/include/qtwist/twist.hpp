#pragma once

#include <optional>

#include "qtwist/twisting.hpp"

namespace qtwist {

/// R_q(v_i⊗v_j) = q v_i⊗v_i (i=j), v_i⊗v_j (i<j), v_i⊗v_j + (q - q⁻¹) v_j⊗v_i (i>j).
template <Field F>
EndTensor<F> classical_rq(int n, const F& q) {
  if (q.is_zero()) throw ZeroParameter();
  EndTensor<F> R(n);
  const F c = q - q.inverse();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) {
        R.set({i, i, i, i}, q);
      } else {
        R.set({i, j, i, j}, F(1));
        if (i > j) R.set({j, i, i, j}, c);
      }
    }
  return R;
}

/// (R^σ)^{kl}_{ij} = Σ_{p,v} α^p_i R^{kv}_{pj} β^l_v.
template <Field F>
EndTensor<F> twist_r(const EndTensor<F>& R, const TwistingPair<F>& pair) {
  const int n = R.n();
  if (pair.n() != n) throw InvalidPair("pair dimension does not match R");
  if (auto bad = violated_relation(frt_relations(R), pair.alpha()))
    throw InvalidPair("alpha violates FRT relation #" + std::to_string(*bad + 1));
  const Matrix<F>& a = pair.alpha();
  const Matrix<F>& b = pair.beta();
  EndTensor<F> out(n);
  for (const auto& [key, val] : R.entries()) {
    auto [k, v, p, j] = EndTensor<F>::unpack(key);
    for (int i = 1; i <= n; ++i) {
      const F& api = a(p - 1, i - 1);
      if (api.is_zero()) continue;
      F s = api * val;
      for (int l = 1; l <= n; ++l) {
        const F& blv = b(l - 1, v - 1);
        if (!blv.is_zero()) out.add({k, l, i, j}, s * blv);
      }
    }
  }
  return out;
}

template <Field F>
struct TwistSpec {
  EndTensor<F> base;
  TwistingPair<F> pair;
  std::optional<QCase> qcase;
};

/// Recovers q from a classical operator R_q, or nullopt if R is not of that form.
template <Field F>
std::optional<F> classical_parameter(const EndTensor<F>& R) {
  F q = R.get({1, 1, 1, 1});
  if (q.is_zero()) return std::nullopt;
  if (!(classical_rq(R.n(), q) == R)) return std::nullopt;
  return q;
}

template <Field F>
QCase qcase_of(const F& q) {
  if (q == F(1)) return QCase::One;
  if (q == F(-1)) return QCase::MinusOne;
  return QCase::Generic;
}

/// Entrywise closed forms for twists of R_q, by q-case.
template <Field F>
EndTensor<F> twist_rq_closed_form(const TwistSpec<F>& spec) {
  auto q = classical_parameter(spec.base);
  if (!q) throw CaseMismatch("base is not a classical operator R_q");
  const QCase actual = qcase_of(*q);
  const QCase c = spec.qcase.value_or(actual);
  if (c != actual) throw CaseMismatch("q-case " + to_string(c) + " does not match q = " + to_string(*q));
  const Matrix<F>& a = spec.pair.alpha();
  const Matrix<F>& b = spec.pair.beta();
  if (!twisting_family_admits(c, a)) throw CaseMismatch("alpha is outside the " + to_string(c) + " family");
  const int n = spec.base.n();
  EndTensor<F> out(n);
  switch (c) {
    case QCase::One:
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l)
          for (int i = 1; i <= n; ++i)
            for (int j = 1; j <= n; ++j) out.set({k, l, i, j}, a(k - 1, i - 1) * b(l - 1, j - 1));
      break;
    case QCase::MinusOne: {
      // τ(r) is the column of the nonzero entry in row r.
      std::vector<int> tau(static_cast<std::size_t>(n + 1)), tau_inv(static_cast<std::size_t>(n + 1));
      for (int r = 1; r <= n; ++r)
        for (int col = 1; col <= n; ++col)
          if (!a(r - 1, col - 1).is_zero()) {
            tau[r] = col;
            tau_inv[col] = r;
          }
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          const int k = tau_inv[i], l = tau[j];
          F v = a(k - 1, i - 1) * a(j - 1, l - 1).inverse();
          out.set({k, l, i, j}, k == j ? -v : v);
        }
      break;
    }
    case QCase::Generic:
      for (const auto& [key, val] : spec.base.entries()) {
        auto [k, l, i, j] = EndTensor<F>::unpack(key);
        out.set({k, l, i, j}, val * a(i - 1, i - 1) * a(l - 1, l - 1).inverse());
      }
      break;
  }
  return out;
}

/// θ on span{1, t^i_j}: θ(t^i_v, t^j_u) = R^{ij}_{vu}, θ(1, x) = θ(x, 1) = ε(x).
template <Field F>
F theta_on_generators(const EndTensor<F>& R, const NCPoly<F>& x, const NCPoly<F>& y) {
  const int n = R.n();
  MatrixCoalgebra C{n, false};
  F total;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) {
      if (wx.size() > 1 || wy.size() > 1) throw DimensionMismatch("theta is evaluated on generators only");
      F v;
      if (wx.empty() && wy.empty())
        v = F(1);
      else if (wx.empty())
        v = C.counit(NCPoly<F>::monomial(wy, F(1)));
      else if (wy.empty())
        v = C.counit(NCPoly<F>::monomial(wx, F(1)));
      else {
        const int i = wx[0] / n + 1, vv = wx[0] % n + 1, j = wy[0] / n + 1, u = wy[0] % n + 1;
        v = R.get({i, j, vv, u});
      }
      total += cx * cy * v;
    }
  return total;
}

template <Field F>
F theta_on_generators(const EndTensor<F>& R, int i, int v, int j, int u) {
  const int n = R.n();
  return theta_on_generators(R, NCPoly<F>::generator(tgen(n, i, v)), NCPoly<F>::generator(tgen(n, j, u)));
}

/// θ^σ(x, y) = θ(φ1^{|y|}(x), φ2^{|x|}(y)) for homogeneous x, y of degree ≤ 1.
template <Field F>
F theta_twisted(const EndTensor<F>& R, const TwistingPair<F>& pair, const NCPoly<F>& x, const NCPoly<F>& y) {
  const long dx = x.is_zero() ? 0 : x.degree(), dy = y.is_zero() ? 0 : y.degree();
  return theta_on_generators(R, apply_phi(pair, PhiWhich::Phi1, dy, x), apply_phi(pair, PhiWhich::Phi2, dx, y));
}

template <Field F>
F theta_twisted(const EndTensor<F>& R, const TwistingPair<F>& pair, int k, int u, int l, int v) {
  const int n = R.n();
  return theta_twisted(R, pair, NCPoly<F>::generator(tgen(n, k, u)), NCPoly<F>::generator(tgen(n, l, v)));
}

/// Specialisation of a tensor at q = q0.
inline EndTensor<Rational> specialize(const EndTensor<RatFunc>& R, const Rational& q0) {
  return R.map([&](const RatFunc& f) { return specialize(f, q0); });
}

template <Field F>
Matrix<F> lift_matrix(const Matrix<Rational>& m) {
  return m.map([](const Rational& r) { return F(r); });
}

}  // namespace qtwist
