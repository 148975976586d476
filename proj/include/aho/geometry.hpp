#pragma once

// Nonadiabatic (Aharonov-Anandan) geometric phase over one cyclic period
// T = 2 pi / lambda' of the perturbed oscillator, for initial states with
// prescribed photon-number statistics.  The general route is a direct double
// summation over the truncated Fock basis; closed forms for number-diagonal
// generators and for the quartic coherent case are checked against it.

#include "aho/fock.hpp"
#include "aho/spectra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace aho {

enum class StatisticsFamily { binomial, poissonian, negative_binomial, custom };

// Amplitudes C_n of the initial state over n = 0..dim-1.  Families are built
// with real non-negative moduli and an optional e^{i n theta} phase ramp;
// `tail_mass` records the probability discarded by the truncation before the
// amplitudes were renormalized to unit norm.
struct InputStatistics {
  StatisticsFamily family = StatisticsFamily::custom;
  std::vector<cplx> amp;
  double tail_mass = 0.0;

  long dim() const { return static_cast<long>(amp.size()); }
  double weight(long n) const { return std::norm(amp[static_cast<std::size_t>(n)]); }

  double mean_n() const {
    double s = 0.0;
    for (long n = 0; n < dim(); ++n) s += weight(n) * static_cast<double>(n);
    return s;
  }

  double expect_poly(const Polynomial& P) const {
    double s = 0.0;
    for (long n = 0; n < dim(); ++n) s += weight(n) * to_double(P.eval(Rat(n)));
    return s;
  }

  void validate() const {
    if (amp.empty()) throw std::invalid_argument("InputStatistics: empty amplitude vector");
    double norm2 = 0.0;
    for (long n = 0; n < dim(); ++n) norm2 += weight(n);
    if (std::abs(norm2 - 1.0) > 1e-9)
      throw std::logic_error("InputStatistics: amplitudes not normalized");
  }
};

namespace detail {

// Apply the phase ramp, renormalize, and record the discarded mass.
inline InputStatistics finish_statistics(StatisticsFamily family, std::vector<double> w,
                                         double theta, double discarded) {
  double norm2 = 0.0;
  for (double v : w) norm2 += v;
  if (norm2 <= 0.0)
    throw std::domain_error("statistics family: weights underflow double precision");
  InputStatistics s;
  s.family = family;
  s.tail_mass = discarded;
  s.amp.resize(w.size());
  for (std::size_t n = 0; n < w.size(); ++n) {
    s.amp[n] = std::polar(std::sqrt(w[n] / norm2), static_cast<double>(n) * theta);
  }
  return s;
}

// Extend a weight recurrence until the remaining mass is below `tail_bound`,
// then keep a few extra levels of safety margin.
template <typename Ratio>
std::vector<double> grow_weights(double w0, double total_mass, Ratio ratio, double tail_bound) {
  std::vector<double> w{w0};
  double cum = w0;
  long n = 0;
  const long hard_cap = 200000;
  while (total_mass - cum > tail_bound * total_mass) {
    const double next = w.back() * ratio(n);
    w.push_back(next);
    cum += next;
    if (++n > hard_cap)
      throw std::domain_error("statistics family: truncation did not converge");
  }
  for (int extra = 0; extra < 8; ++extra) {
    w.push_back(w.back() * ratio(n));
    ++n;
  }
  return w;
}

} // namespace detail

// Poissonian statistics of a coherent state alpha = |alpha| e^{i theta}.
inline InputStatistics poissonian_statistics(double alpha_mag, double theta = 0.0,
                                             double tail_bound = 1e-12) {
  if (alpha_mag < 0.0) throw std::domain_error("poissonian_statistics: |alpha| must be >= 0");
  const double N0 = alpha_mag * alpha_mag;
  if (N0 == 0.0)
    return detail::finish_statistics(StatisticsFamily::poissonian, {1.0}, theta, 0.0);
  auto w = detail::grow_weights(
      std::exp(-N0), 1.0, [&](long n) { return N0 / static_cast<double>(n + 1); }, tail_bound);
  double cum = 0.0;
  for (double v : w) cum += v;
  return detail::finish_statistics(StatisticsFamily::poissonian, std::move(w), theta,
                                   std::max(0.0, 1.0 - cum));
}

// Sub-Poissonian binomial statistics: |C_n|^2 = C(N,n) p^n (1-p)^{N-n},
// n = 0..N (finite support, no truncation tail).
inline InputStatistics binomial_statistics(long N, double p, double theta = 0.0) {
  if (N < 0) throw std::domain_error("binomial_statistics: N must be >= 0");
  if (p < 0.0 || p > 1.0) throw std::domain_error("binomial_statistics: p must lie in [0, 1]");
  std::vector<double> w(static_cast<std::size_t>(N) + 1, 0.0);
  if (p == 1.0) {
    w.back() = 1.0;
  } else {
    w[0] = std::pow(1.0 - p, static_cast<double>(N));
    if (w[0] == 0.0)
      throw std::domain_error("binomial_statistics: weights underflow double precision");
    for (long n = 0; n < N; ++n) {
      w[static_cast<std::size_t>(n) + 1] = w[static_cast<std::size_t>(n)] * p *
                                           static_cast<double>(N - n) /
                                           ((1.0 - p) * static_cast<double>(n + 1));
    }
  }
  return detail::finish_statistics(StatisticsFamily::binomial, std::move(w), theta, 0.0);
}

// Super-Poissonian negative-binomial statistics:
// |C_n|^2 = C(n+W-1, n) q^n (1-q)^W.  W may be any positive real; q = 1 has
// no normalizable distribution and is rejected.
inline InputStatistics negative_binomial_statistics(double W, double q, double theta = 0.0,
                                                    double tail_bound = 1e-12) {
  if (W <= 0.0) throw std::domain_error("negative_binomial_statistics: W must be > 0");
  if (q < 0.0 || q >= 1.0)
    throw std::domain_error("negative_binomial_statistics: q must lie in [0, 1)");
  const double w0 = std::pow(1.0 - q, W);
  if (w0 == 0.0)
    throw std::domain_error("negative_binomial_statistics: weights underflow double precision");
  if (q == 0.0)
    return detail::finish_statistics(StatisticsFamily::negative_binomial, {w0}, theta, 0.0);
  auto w = detail::grow_weights(
      w0, 1.0, [&](long n) { return q * (static_cast<double>(n) + W) / static_cast<double>(n + 1); },
      tail_bound);
  double cum = 0.0;
  for (double v : w) cum += v;
  return detail::finish_statistics(StatisticsFamily::negative_binomial, std::move(w), theta,
                                   std::max(0.0, 1.0 - cum));
}

// Arbitrary amplitudes, renormalized.
inline InputStatistics custom_statistics(std::vector<cplx> amp) {
  double norm2 = 0.0;
  for (const cplx& a : amp) norm2 += std::norm(a);
  if (norm2 <= 0.0) throw std::domain_error("custom_statistics: zero state");
  InputStatistics s;
  s.family = StatisticsFamily::custom;
  s.amp = std::move(amp);
  for (cplx& a : s.amp) a /= std::sqrt(norm2);
  return s;
}

// (a^dag + a)^m with exact interior matrix elements: the power is taken in a
// basis padded by m levels so truncation artifacts cannot reach the returned
// block.
inline Mat field_power_matrix(long m, long dim) {
  if (m < 0) throw std::domain_error("field_power_matrix: m must be >= 0");
  if (dim < 1) throw std::domain_error("field_power_matrix: dim must be >= 1");
  auto [a, ad] = ladder_ops(dim + m);
  const Mat x = ad + a;
  return matrix_power(x, m).block(0, 0, dim, dim);
}

// General route: beta = 2 pi + sum_n |C_n|^2 (2 pi n / lambda')
//                                + 2 pi sum_{k,n} C_k^* C_n <k|F|n>.
// The n / lambda' sum removes the dynamical phase accumulated over the period
// T = 2 pi / lambda'; some prior treatments omit it, so it is kept explicit
// here rather than folded into F.
inline double aa_phase_general(const InputStatistics& stats, double lambda_prime, const Mat& F) {
  if (!(lambda_prime > 0.0))
    throw std::domain_error("aa_phase_general: lambda' must be > 0 (finite period)");
  stats.validate();
  const long d = stats.dim();
  if (F.rows() < d || F.cols() < d)
    throw std::invalid_argument("aa_phase_general: F smaller than the statistics basis");
  const double scale = F.cwiseAbs().maxCoeff();
  if ((F.block(0, 0, d, d) - F.block(0, 0, d, d).adjoint()).cwiseAbs().maxCoeff() >
      1e-10 * (1.0 + scale))
    throw std::invalid_argument("aa_phase_general: F must be Hermitian");

  cplx off(0.0, 0.0);
  for (long k = 0; k < d; ++k) {
    for (long n = 0; n < d; ++n) {
      off += std::conj(stats.amp[static_cast<std::size_t>(k)]) *
             stats.amp[static_cast<std::size_t>(n)] * F(k, n);
    }
  }
  if (std::abs(off.imag()) > 1e-12 * (1.0 + std::abs(off.real())))
    throw std::logic_error("aa_phase_general: expectation of Hermitian F came out complex");
  return 2.0 * kPi * (1.0 + stats.mean_n() / lambda_prime + off.real());
}

// Number-diagonal generator: beta = sum_n |C_n|^2 2 pi (1 + n/lambda' + P(n)).
inline double aa_phase_number_poly(const InputStatistics& stats, double lambda_prime,
                                   const Polynomial& P) {
  if (!(lambda_prime > 0.0))
    throw std::domain_error("aa_phase_number_poly: lambda' must be > 0 (finite period)");
  stats.validate();
  return 2.0 * kPi * (1.0 + stats.mean_n() / lambda_prime + stats.expect_poly(P));
}

namespace detail {

// a! / b! for a >= b >= 0, exact.
inline Int falling_ratio(long a, long b) {
  Int r = 1;
  for (long v = b + 1; v <= a; ++v) r *= v;
  return r;
}

} // namespace detail

// Combinatorial route for F = (a^dag + a)^m: the normal-ordered expansion
// sum_{r,p} t_{2r} C(m,2r) C(m-2r,p) a^dag^p a^{m-2r-p} summed against the
// amplitudes with exact factorial-ratio matrix elements
// <n-(m-2r-p)+p | a^dag^p a^{m-2r-p} | n> = sqrt(n! (n-m+2r+2p)!)/(n-m+2r+p)!.
inline double aa_phase_m(const InputStatistics& stats, long m, double lambda_prime) {
  if (m < 1) throw std::domain_error("aa_phase_m: m must be >= 1");
  if (!(lambda_prime > 0.0))
    throw std::domain_error("aa_phase_m: lambda' must be > 0 (finite period)");
  stats.validate();
  const long d = stats.dim();

  cplx off(0.0, 0.0);
  for (long r = 0; 2 * r <= m; ++r) {
    const double base = to_double(t_coeff(2 * r) * binomial(m, 2 * r));
    for (long p = 0; p <= m - 2 * r; ++p) {
      const double coeff = base * to_double(binomial(m - 2 * r, p));
      const long qa = m - 2 * r - p; // annihilation power
      for (long n = qa; n < d; ++n) {
        const long low = n - qa;
        const long bra = low + p;
        if (bra >= d) continue;
        const double elem = std::sqrt(to_double(detail::falling_ratio(n, low)) *
                                      to_double(detail::falling_ratio(bra, low)));
        off += coeff * elem * std::conj(stats.amp[static_cast<std::size_t>(bra)]) *
               stats.amp[static_cast<std::size_t>(n)];
      }
    }
  }
  if (std::abs(off.imag()) > 1e-12 * (1.0 + std::abs(off.real())))
    throw std::logic_error("aa_phase_m: expectation of Hermitian generator came out complex");
  return 2.0 * kPi * (1.0 + stats.mean_n() / lambda_prime + off.real());
}

// Closed form for the quartic oscillator on a coherent state
// alpha = |alpha| e^{i theta}:
// beta = 8 pi + 2 pi [ (6 N0^2 + 12 N0 + N0/lambda')
//                      + 4 N0 (2 N0 + 3) cos 2 theta + 2 N0^2 cos 4 theta ],
// N0 = |alpha|^2.  The cos 4 theta weight is N0^2 (prior statements quoting
// N0 there disagree with the direct Fock-basis summation at N0 != 1).
inline double aa_phase_quartic_coherent(double alpha_mag, double theta, double lambda_prime) {
  if (!(lambda_prime > 0.0))
    throw std::domain_error("aa_phase_quartic_coherent: lambda' must be > 0 (finite period)");
  const double N0 = alpha_mag * alpha_mag;
  return 8.0 * kPi +
         2.0 * kPi *
             ((6.0 * N0 * N0 + 12.0 * N0 + N0 / lambda_prime) +
              4.0 * N0 * (2.0 * N0 + 3.0) * std::cos(2.0 * theta) +
              2.0 * N0 * N0 * std::cos(4.0 * theta));
}

} // namespace aho
