#pragma once

// First-order Heisenberg-picture field evolution for the anharmonic oscillator:
//  * general-m interaction-picture a(t) with its resonant secular term,
//  * the quartic D-coefficient specialization,
//  * the secular-term-removed (frequency-operator-dressed) form,
//  * first-order N(t), N^2(t) operator pairs,
//  * the multiple-scale dressed position operator,
//  * harmonic content of the perturbative trajectories.

#include "aho/fock.hpp"
#include "aho/ordering.hpp"
#include "aho/spectra.hpp"

#include <complex>
#include <vector>

namespace aho {

// Quality heuristic: first-order secular terms are trustworthy for lambda*t small.
inline bool secular_window_ok(double lambda, double t) { return lambda * t <= 0.3; }

struct DCoeffs {
  cplx D1, D2, D3, D4, D5, D6;
};

// Time-evolution coefficients of the quartic oscillator to first order:
// a(t) = D1 a + D2 a^dag - [D3 a^3 + D4 a^dag^3 + D5 a^dag^2 a + D6 a^dag a^2].
inline DCoeffs quartic_d_coeffs(double lambda, double t) {
  const cplx I(0.0, 1.0);
  DCoeffs d;
  d.D1 = (1.0 - I * (3.0 * lambda / 4.0) * t) * std::exp(-I * t);
  d.D2 = -I * (3.0 * lambda / 4.0) * std::sin(t);
  d.D3 = I * (lambda / 4.0) * std::sin(t) * std::exp(-2.0 * I * t);
  d.D4 = I * (lambda / 8.0) * std::sin(2.0 * t) * std::exp(I * t);
  d.D5 = I * (3.0 * lambda / 4.0) * std::sin(t);
  d.D6 = I * (3.0 * lambda / 4.0) * t * std::exp(-I * t);
  return d;
}

inline Mat quartic_a_assembled(const DCoeffs& d, long dim) {
  auto [a, ad] = ladder_ops(dim);
  return d.D1 * a + d.D2 * ad -
         (d.D3 * (a * a * a) + d.D4 * (ad * ad * ad) + d.D5 * (ad * ad * a) + d.D6 * (ad * a * a));
}

namespace detail {
inline std::vector<Mat> op_powers(const Mat& A, long max_pow) {
  std::vector<Mat> p(static_cast<std::size_t>(max_pow) + 1);
  p[0] = Mat::Identity(A.rows(), A.cols());
  for (long k = 1; k <= max_pow; ++k) p[k] = p[k - 1] * A;
  return p;
}

// diag f(H0) for scalar callable f over eigenvalue n + 1/2.
template <typename F>
Mat diag_h0_function(long dim, F&& f) {
  Mat d = Mat::Zero(dim, dim);
  for (long n = 0; n < dim; ++n) d(n, n) = f(n + 0.5);
  return d;
}
} // namespace detail

// Heisenberg-picture a(t) = e^{-it} a_I(t) to first order in lambda, for general
// even m.  The double sum runs over the normal-ordered expansion labels (r, p);
// the resonant p = (m-2r)/2 term contributes the linear-in-t secular piece.
inline Mat a_first_order(const OscillatorSpec& spec, double t) {
  spec.validate();
  const long m = spec.m, dim = spec.dim;
  const double lp = spec.lambda_prime();
  const cplx I(0.0, 1.0);
  auto [a, ad] = ladder_ops(dim);
  auto apow = detail::op_powers(a, m);
  auto adpow = detail::op_powers(ad, m);

  Mat osc = Mat::Zero(dim, dim);
  Mat sec = Mat::Zero(dim, dim);
  for (long r = 0; 2 * r <= m; ++r) {
    const long kr = (m - 2 * r) / 2;
    const Int br = t_coeff(2 * r) * binomial(m, 2 * r);
    for (long p = 1; p <= m - 2 * r; ++p) {
      const double c = to_double(br * binomial(m - 2 * r, p)) * static_cast<double>(p);
      if (p == kr) {
        sec += c * (adpow[kr - 1] * apow[kr]);
      } else {
        const long delta2 = 2 * p - (m - 2 * r); // 2p - m + 2r
        const cplx phase = (std::exp(I * t * static_cast<double>(delta2)) - 1.0) /
                           static_cast<double>(delta2);
        osc += (c * phase) * (adpow[p - 1] * apow[m - 2 * r - p]);
      }
    }
  }
  Mat a_int = a - lp * osc - I * (lp * t) * sec;
  return std::exp(-I * t) * a_int;
}

// Placement of the frequency-operator phase inside the dressed off-resonant
// terms; the printed form is ambiguous, the variants differ at O(lambda^2).
enum class OmegaPlacement { left, mid, right };

// Secular-term-removed a(t): the linear-in-t resonant piece is resummed into
// the diagonal phase e^{-i lambda Omega1 t}, keeping the form bounded in t.
inline Mat a_secular_removed(const OscillatorSpec& spec, double t,
                             OmegaPlacement placement = OmegaPlacement::mid) {
  spec.validate();
  const long m = spec.m, dim = spec.dim;
  const double lp = spec.lambda_prime();
  const cplx I(0.0, 1.0);
  auto [a, ad] = ladder_ops(dim);
  auto apow = detail::op_powers(a, m);
  auto adpow = detail::op_powers(ad, m);

  Polynomial om1 = freq_operator_first(m);
  auto omega_phase = [&](double factor) {
    return detail::diag_h0_function(dim, [&](double h0) {
      return std::exp(I * factor * spec.lambda * t * om1.eval(h0));
    });
  };

  Mat dressed = omega_phase(-1.0) * a;
  Mat osc = Mat::Zero(dim, dim);
  for (long r = 0; 2 * r <= m; ++r) {
    const long kr = (m - 2 * r) / 2;
    const Int br = t_coeff(2 * r) * binomial(m, 2 * r);
    for (long p = 1; p <= m - 2 * r; ++p) {
      if (p == kr) continue;
      const double c = to_double(br * binomial(m - 2 * r, p)) * static_cast<double>(p);
      const long delta2 = 2 * p - (m - 2 * r);
      const cplx phase = (std::exp(I * t * static_cast<double>(delta2)) - 1.0) /
                         static_cast<double>(delta2);
      Mat dress = omega_phase(static_cast<double>(delta2 - 1));
      Mat term;
      switch (placement) {
        case OmegaPlacement::left: term = dress * adpow[p - 1] * apow[m - 2 * r - p]; break;
        case OmegaPlacement::mid: term = adpow[p - 1] * dress * apow[m - 2 * r - p]; break;
        case OmegaPlacement::right: term = adpow[p - 1] * apow[m - 2 * r - p] * dress; break;
      }
      osc += (c * phase) * term;
    }
  }
  return std::exp(-I * t) * (dressed - lp * osc);
}

struct EvolvedNumber {
  Mat N;
  Mat N2;
};

// N(t) and N^2(t) to strictly first order in lambda (quartic oscillator).  The
// products of D coefficients are linearized: kappa_k = e^{it} D_k at O(lambda).
inline EvolvedNumber number_evolved(double N0, double theta, double lambda, double t, long dim = 0) {
  (void)theta; // the operator forms are state-independent; N0 only sizes the default basis
  if (dim <= 0) dim = default_dim(4, std::sqrt(std::max(N0, 0.0)));
  const cplx I(0.0, 1.0);
  const double s = std::sin(t), s2 = std::sin(2.0 * t);
  const cplx k2 = -I * (3.0 * lambda / 4.0) * s * std::exp(I * t);
  const cplx k3 = I * (lambda / 4.0) * s * std::exp(-I * t);
  const cplx k4 = I * (lambda / 8.0) * s2 * std::exp(2.0 * I * t);
  const cplx k5 = I * (3.0 * lambda / 4.0) * s * std::exp(I * t);
  const cplx k6 = I * (3.0 * lambda / 4.0) * t;

  auto [a, ad] = ladder_ops(dim);
  auto ap = detail::op_powers(a, 6);
  auto adp = detail::op_powers(ad, 6);
  auto herm = [](const cplx& c, const Mat& M) { return Mat(c * M + std::conj(c) * M.adjoint()); };

  EvolvedNumber out;
  out.N = adp[1] * ap[1] + herm(k2, adp[2]) - herm(k3, adp[1] * ap[3]) - herm(k4, adp[4]) -
          herm(k5, adp[3] * ap[1]) - herm(k6, adp[2] * ap[2]);
  out.N2 = adp[2] * ap[2] + adp[1] * ap[1] + herm(2.0 * k2, adp[3] * ap[1] + adp[2]) -
           herm(2.0 * k3, adp[2] * ap[4] + 2.0 * adp[1] * ap[3]) -
           herm(2.0 * k4, adp[5] * ap[1] + 2.0 * adp[4]) -
           herm(2.0 * k5, adp[4] * ap[2] + 2.0 * adp[3] * ap[1]) -
           herm(2.0 * k6, adp[3] * ap[3] + 2.0 * adp[2] * ap[2]);
  return out;
}

// Multiple-scale dressed position operator:
// X0(t) = (1/G)[X cosPhi + cosPhi X + Xdot sinPhi + sinPhi Xdot],
// Phi = t(1 + lambda Omega(H0)) with the position-form frequency polynomial,
// the normalizer G applied per matrix element at the larger index.
inline Mat mspt_position(const OscillatorSpec& spec, double t) {
  spec.validate();
  const long dim = spec.dim;
  Polynomial om = mspt_omega_poly(spec.m);
  Mat cosPhi = detail::diag_h0_function(dim, [&](double h0) {
    return std::cos(t * (1.0 + spec.lambda * om.eval(h0)));
  });
  Mat sinPhi = detail::diag_h0_function(dim, [&](double h0) {
    return std::sin(t * (1.0 + spec.lambda * om.eval(h0)));
  });
  Mat X = x_op(dim), Xd = xdot_op(dim);
  Mat stuff = X * cosPhi + cosPhi * X + Xd * sinPhi + sinPhi * Xd;
  Mat out = Mat::Zero(dim, dim);
  for (long j = 0; j < dim; ++j) {
    for (long k = 0; k < dim; ++k) {
      if (stuff(j, k) == cplx(0.0, 0.0)) continue;
      const long larger = std::max(j, k);
      out(j, k) = stuff(j, k) / mspt_normalizer(spec.m, larger, spec.lambda, t);
    }
  }
  return out;
}

// Harmonics present in the first-order trajectories: 3, 5, ..., m-1 for even m.
inline std::vector<long> harmonic_content(long m) {
  if (m < 4 || m % 2 != 0) throw std::domain_error("harmonic_content: m must be even and >= 4");
  std::vector<long> h;
  for (long k = 3; k <= m - 1; k += 2) h.push_back(k);
  return h;
}

} // namespace aho
