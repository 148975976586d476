#pragma once

// Second-order interaction-picture solution for the field operator, derived
// from scratch: U^dag a U = a + i INT [V(s), a] ds
//                             - INT_0^t ds1 [W(s1), [V(s1), a]],
// with V(s) the interaction-picture perturbation and W(s) its running
// integral.  The algebra is done symbolically over normal-ordered monomials
// a^dag^p a^q with coefficient functions spanned by s^j e^{iks}, so every
// time integral is exact.  This provides the independent check (and, where
// needed, the replacement) for second-order coefficient tables quoted in
// prior literature.

#include "aho/evolution.hpp"

#include <array>
#include <map>
#include <utility>

namespace aho {
namespace dyson {

// Coefficient function: sum of c * s^j * e^{i k s} terms, keyed by (j, k).
using TrigFn = std::map<std::pair<long, long>, cplx>;

inline void add_term(TrigFn& f, long j, long k, cplx c) {
  if (c == cplx(0.0, 0.0)) return;
  f[{j, k}] += c;
}

inline TrigFn mul(const TrigFn& a, const TrigFn& b) {
  TrigFn out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) add_term(out, ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

inline TrigFn scale(const TrigFn& a, cplx w) {
  TrigFn out;
  for (const auto& [k, c] : a) add_term(out, k.first, k.second, w * c);
  return out;
}

inline void accumulate(TrigFn& into, const TrigFn& from, cplx w = cplx(1.0, 0.0)) {
  for (const auto& [k, c] : from) add_term(into, k.first, k.second, w * c);
}

// Definite integral from 0 to t of s^j e^{iks}, returned as a TrigFn in t.
inline TrigFn integrate_monomial(long j, long k) {
  TrigFn out;
  if (k == 0) {
    add_term(out, j + 1, 0, cplx(1.0 / static_cast<double>(j + 1), 0.0));
    return out;
  }
  const cplx ik(0.0, static_cast<double>(k));
  // I_j = t^j e^{ikt} / (ik) - (j / (ik)) I_{j-1};  I_0 = (e^{ikt} - 1) / (ik)
  TrigFn cur;
  add_term(cur, 0, k, 1.0 / ik);
  add_term(cur, 0, 0, -1.0 / ik);
  for (long jj = 1; jj <= j; ++jj) {
    TrigFn next;
    add_term(next, jj, k, 1.0 / ik);
    accumulate(next, cur, -static_cast<double>(jj) / ik);
    cur = std::move(next);
  }
  return cur;
}

inline TrigFn integrate(const TrigFn& f) {
  TrigFn out;
  for (const auto& [k, c] : f) accumulate(out, integrate_monomial(k.first, k.second), c);
  return out;
}

inline cplx eval(const TrigFn& f, double t) {
  cplx v(0.0, 0.0);
  for (const auto& [k, c] : f)
    v += c * std::pow(t, static_cast<double>(k.first)) *
         std::exp(cplx(0.0, static_cast<double>(k.second) * t));
  return v;
}

// Normal-ordered operator polynomial with TrigFn coefficients, keyed by
// (p, q) for a^dag^p a^q.
using Mono = std::pair<long, long>;
using OpFn = std::map<Mono, TrigFn>;

// a^dag^p a^q * a^dag^p2 a^q2 = sum_k k! C(q,k) C(p2,k) a^dag^{p+p2-k} a^{q+q2-k}
inline std::map<Mono, double> normal_product(Mono A, Mono B) {
  std::map<Mono, double> out;
  const long kmax = std::min(A.second, B.first);
  for (long k = 0; k <= kmax; ++k) {
    const double c = to_double(factorial(k) * binomial(A.second, k) * binomial(B.first, k));
    out[{A.first + B.first - k, A.second + B.second - k}] += c;
  }
  return out;
}

inline void accumulate_op(OpFn& into, const OpFn& from, cplx w = cplx(1.0, 0.0)) {
  for (const auto& [mono, fn] : from) accumulate(into[mono], fn, w);
}

inline OpFn commutator(const OpFn& X, const OpFn& Y) {
  OpFn out;
  for (const auto& [mx, fx] : X) {
    for (const auto& [my, fy] : Y) {
      const TrigFn prod = mul(fx, fy);
      for (const auto& [mono, c] : normal_product(mx, my)) accumulate(out[mono], prod, c);
      for (const auto& [mono, c] : normal_product(my, mx)) accumulate(out[mono], prod, -c);
    }
  }
  // drop numerically cancelled entries
  for (auto it = out.begin(); it != out.end();) {
    double mass = 0.0;
    for (const auto& [k, c] : it->second) mass += std::abs(c);
    it = (mass < 1e-14) ? out.erase(it) : std::next(it);
  }
  return out;
}

// Interaction-picture perturbation divided by lambda':
// (a e^{-is} + a^dag e^{is})^m = sum_{r,p} t_{2r} C(m,2r) C(m-2r,p)
//                                a^dag^p a^{m-2r-p} e^{is(2p-m+2r)}.
inline OpFn perturbation(long m) {
  OpFn v;
  for (long r = 0; 2 * r <= m; ++r) {
    const Int base = t_coeff(2 * r) * binomial(m, 2 * r);
    for (long p = 0; p <= m - 2 * r; ++p) {
      TrigFn f;
      add_term(f, 0, 2 * p - m + 2 * r, to_double(base * binomial(m - 2 * r, p)));
      accumulate(v[{p, m - 2 * r - p}], f);
    }
  }
  return v;
}

} // namespace dyson

// Coefficients of a^dag^p a^q in U^dag a U, graded by powers of lambda';
// grade 0 is the bare a.  Multiply by e^{-it} for the Heisenberg operator.
struct SecondOrderSolution {
  std::map<dyson::Mono, std::array<cplx, 3>> coeff;
};

inline SecondOrderSolution a_interaction_second_order(long m, double t) {
  if (m < 4 || m % 2 != 0)
    throw std::domain_error("a_interaction_second_order: m must be even and >= 4");
  using namespace dyson;
  const OpFn V = perturbation(m);
  OpFn A;
  add_term(A[{0, 1}], 0, 0, cplx(1.0, 0.0));

  // first order: i INT_0^t [V(s), a] ds
  const OpFn C1 = commutator(V, A);
  // second order: - INT_0^t [W(s), [V(s), a]] ds, W(s) = INT_0^s V
  OpFn W;
  for (const auto& [mono, fn] : V) W[mono] = integrate(fn);
  const OpFn C2 = commutator(W, C1);

  SecondOrderSolution sol;
  sol.coeff[{0, 1}][0] = cplx(1.0, 0.0);
  for (const auto& [mono, fn] : C1) sol.coeff[mono][1] += cplx(0.0, 1.0) * eval(integrate(fn), t);
  for (const auto& [mono, fn] : C2) sol.coeff[mono][2] -= eval(integrate(fn), t);
  return sol;
}

// Full second-order Heisenberg a(t) as a matrix (exact to O(lambda'^2)).
inline Mat a_second_order(const OscillatorSpec& spec, double t) {
  spec.validate();
  const SecondOrderSolution sol = a_interaction_second_order(spec.m, t);
  const double lp = spec.lambda_prime();
  auto [a, ad] = ladder_ops(spec.dim);
  Mat out = Mat::Zero(spec.dim, spec.dim);
  for (const auto& [mono, grades] : sol.coeff) {
    const cplx w = grades[0] + lp * grades[1] + lp * lp * grades[2];
    if (w == cplx(0.0, 0.0)) continue;
    out += w * (matrix_power(ad, mono.first) * matrix_power(a, mono.second));
  }
  return std::exp(cplx(0.0, -t)) * out;
}

} // namespace aho
