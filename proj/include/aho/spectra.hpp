#pragma once

// Perturbative spectra of H = a^dag a + 1/2 + lambda' (a^dag+a)^m:
//  * first-order energies and level spacings for general even m (exact rationals),
//  * the multiple-scale frequency values Omega(n+1/2), their normalizer G, and
//    the position-form frequency polynomial,
//  * the first-order frequency operator Omega1(H0) in its annihilation form,
//  * exact averaging maps connecting the two frequency conventions,
//  * the quartic second-order package (psi_n, E_n, Delta E_n, frequency operators).

#include "aho/fock.hpp"
#include "aho/ordering.hpp"
#include "aho/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace aho {

// C(x, k) as a degree-k polynomial in x: x(x-1)...(x-k+1)/k!
inline Polynomial binomial_poly(long k) {
  Polynomial p = Polynomial::constant(Rat(1));
  for (long i = 0; i < k; ++i) p = p * Polynomial({Rat(-i), Rat(1)});
  Rat inv = Rat(1) / Rat(factorial(k));
  return inv * p;
}

// lambda-coefficient of the first-order energy E_n, as an exact polynomial in n:
// (1/(2^{m/2} m)) sum over even r of t_r C(m,r) C(m-r,(m-r)/2) C(n,(m-r)/2) ((m-r)/2)!
inline Polynomial first_order_energy_poly(long m) {
  if (m < 4 || m % 2 != 0) throw std::domain_error("first_order_energy_poly: m must be even and >= 4");
  Polynomial acc;
  for (long r = 0; r <= m; r += 2) {
    const long half = (m - r) / 2;
    Rat c = Rat(t_coeff(r) * binomial(m, r) * binomial(m - r, half) * factorial(half));
    acc += c * binomial_poly(half);
  }
  Rat norm = Rat(1) / Rat(Int(m) * (Int(1) << (m / 2)));
  return norm * acc;
}

struct FirstOrderEnergy {
  Rat base;         // n + 1/2
  Rat lambda_coeff; // multiplies lambda
  double value(double lambda) const { return to_double(base) + lambda * to_double(lambda_coeff); }
};

inline FirstOrderEnergy first_order_energy(long m, long n) {
  if (n < 0) throw std::domain_error("first_order_energy: n must be >= 0");
  return {Rat(n) + Rat(1, 2), first_order_energy_poly(m).eval(Rat(n))};
}

// omega(m, n) = first-order lambda-coefficient of E_n - E_{n-1}, as a polynomial in n.
inline Polynomial level_spacing_poly(long m) {
  Polynomial p = first_order_energy_poly(m);
  return p - p.shift(Rat(-1));
}

inline Rat level_spacing_first(long m, long n) {
  if (n < 1) throw std::domain_error("level_spacing_first: n must be >= 1");
  return level_spacing_poly(m).eval(Rat(n));
}

// Omega(n+1/2) by the alternating-sum closure:
// 2 sum_{k=0..n} (-1)^{n-k} omega(m,k) + (-1)^{n+m/2} t_m / (2^{(m-2)/2} m).
inline Rat mspt_omega_half(long m, long n) {
  if (n < 0) throw std::domain_error("mspt_omega_half: n must be >= 0");
  Polynomial omega = level_spacing_poly(m);
  Rat acc = 0;
  for (long k = 0; k <= n; ++k) {
    Rat term = 2 * omega.eval(Rat(k));
    acc += ((n - k) % 2 == 0) ? term : -term;
  }
  Rat tail = Rat(t_coeff(m)) / Rat(Int(m) * (Int(1) << ((m - 2) / 2)));
  acc += ((n + m / 2) % 2 == 0) ? tail : -tail;
  return acc;
}

// First-order frequency operator Omega1(H0) (annihilation-operator route):
// (1/(m 2^{m/2})) sum_{r=0}^{m/2-1} k_r t_{2r} C(m,2r) C(m-2r,k_r) a^dag^{k_r-1} a^{k_r-1}
// with a^dag^k a^k = prod_{j=1..k} (H0 - (2j-1)/2), expanded to an exact polynomial.
inline Polynomial freq_operator_first(long m) {
  if (m < 4 || m % 2 != 0) throw std::domain_error("freq_operator_first: m must be even and >= 4");
  Polynomial acc;
  for (long r = 0; r < m / 2; ++r) {
    const long kr = (m - 2 * r) / 2;
    Rat c = Rat(kr) * Rat(t_coeff(2 * r) * binomial(m, 2 * r) * binomial(m - 2 * r, kr));
    Polynomial prod = Polynomial::constant(Rat(1));
    for (long j = 1; j <= kr - 1; ++j) prod = prod * Polynomial({Rat(-(2 * j - 1), 2), Rat(1)});
    acc += c * prod;
  }
  Rat norm = Rat(1) / Rat(Int(m) * (Int(1) << (m / 2)));
  return norm * acc;
}

// Averaging map between the position-form frequency polynomial omega1(H0) and the
// annihilation-form Omega1(H0): Omega1(x) = (omega1(x) + omega1(x+1))/2.
inline Polynomial average_map(const Polynomial& omega1) {
  return Rat(1, 2) * (omega1 + omega1.shift(Rat(1)));
}

// Inverse of average_map: omega1 = sum_j c_j Omega1^{(j)} with c_j the series
// coefficients of 2/(1+e^xi).
inline Polynomial inverse_average_map(const Polynomial& Omega1) {
  const std::size_t len = static_cast<std::size_t>(std::max<long>(Omega1.degree(), 0)) + 1;
  std::vector<Rat> half_sum{Rat(1)};
  Rat fact = 1;
  for (std::size_t k = 1; k < len; ++k) {
    fact *= static_cast<long>(k);
    half_sum.push_back(Rat(1) / (2 * fact));
  }
  std::vector<Rat> c = invert_series(half_sum, len);
  Polynomial out, deriv = Omega1;
  for (std::size_t j = 0; j < len; ++j) {
    out += c[j] * deriv;
    deriv = deriv.derivative();
  }
  return out;
}

// Position-form frequency polynomial Omega(H0) (degree m/2 - 1); its values at
// H0 = n + 1/2 coincide with mspt_omega_half.
inline Polynomial mspt_omega_poly(long m) { return inverse_average_map(freq_operator_first(m)); }

// Matrix-element normalizer G = 2 cos[(lambda t / 2)(Omega(n+1/2) - Omega(n-1/2))].
inline double mspt_normalizer(long m, long n, double lambda, double t) {
  if (n < 0) throw std::domain_error("mspt_normalizer: n must be >= 0");
  Polynomial om = mspt_omega_poly(m);
  Rat diff = om.eval(Rat(2 * n + 1, 2)) - om.eval(Rat(2 * n - 1, 2));
  return 2.0 * std::cos(0.5 * lambda * t * to_double(diff));
}

// Perturbative validity heuristic: flag when lambda * n^{m/2-1} grows past 0.1.
inline bool lambda_window_ok(long m, long max_n, double lambda) {
  return lambda * std::pow(static_cast<double>(std::max<long>(max_n, 1)), m / 2.0 - 1.0) <= 0.1;
}

// ---------------------------------------------------------------------------
// Quartic oscillator, second order.

struct QuarticSecondOrder {
  double psi_n;   // diagonal normalization element
  double E_n;     // energy through second order
  double delta_E; // E_n - E_{n-1} through second order
};

inline QuarticSecondOrder quartic_second_order(long n, double lambda) {
  if (n < 0) throw std::domain_error("quartic_second_order: n must be >= 0");
  const double nd = static_cast<double>(n);
  const double l2 = lambda * lambda;
  QuarticSecondOrder r;
  r.psi_n = 1.0 + 0.75 * lambda * (nd + 0.5) - (l2 / 64.0) * (51 * nd * nd + 51 * nd + 21);
  r.E_n = (nd + 0.5) + (3.0 / 8.0) * lambda * (nd * nd + nd + 0.5) -
          (l2 / 128.0) * (34 * nd * nd * nd + 51 * nd * nd + 59 * nd + 21);
  r.delta_E = 1.0 + 0.75 * lambda * nd - (l2 / 64.0) * (51 * nd * nd + 21);
  return r;
}

// Second-order frequency operators for the quartic oscillator:
//   Omega2 = -(1/64)(69 H0^2 + 51 H0 - 12 X^4 + 153/4)
//   omega2 = -(1/64)(69 H0^2 - 12 X^4 + 51/4)
struct QuarticOmega2 {
  Mat Omega2;
  Mat omega2;
};

inline QuarticOmega2 quartic_omega2_operators(long dim) {
  Mat h0 = h0_op(dim);
  Mat x4 = matrix_power(x_op(dim), 4);
  Mat id = Mat::Identity(dim, dim);
  QuarticOmega2 r;
  r.Omega2 = -(1.0 / 64.0) * (69.0 * h0 * h0 + 51.0 * h0 - 12.0 * x4 + (153.0 / 4.0) * id);
  r.omega2 = -(1.0 / 64.0) * (69.0 * h0 * h0 - 12.0 * x4 + (51.0 / 4.0) * id);
  return r;
}

// <n|Omega2|n> = -(3/64)(17(n+1)^2 + 7): exactly the second-order piece of E_{n+1} - E_n.
inline Rat quartic_omega2_diag(long n) {
  Rat np1 = Rat(n + 1);
  return Rat(-3, 64) * (17 * np1 * np1 + 7);
}

// Alternative second-order diagonal found in prior literature; disagrees with
// the series: -(3/64)(5 n^2 - 1) at the (n-1,n-1) element, i.e. -(3/64)(5(n+1)^2 - 1) at (n,n).
inline Rat quartic_omega2_alt_diag(long n) {
  Rat np1 = Rat(n + 1);
  return Rat(-3, 64) * (5 * np1 * np1 - 1);
}

// Same alternative form as a polynomial in H0 for direct comparison.
inline Polynomial quartic_omega2_alt_poly() {
  // -(3/64)(5 H0^2 + 5 H0 + 1/4)
  return Rat(-3, 64) * Polynomial({Rat(1, 4), Rat(5), Rat(5)});
}

} // namespace aho
