#pragma once

// Classical anharmonic oscillators: perturbative trajectories for
// x'' + x + lambda*x^(m-1) = 0 (m = 4, 6, 8), their frequency-renormalized
// (secular-term-free) forms, an energy-conserving RK4 oracle, and an exact
// symbolic "tuck-in" transform that absorbs secular t*sin(t) growth into a
// frequency shift and verifies itself by Taylor re-expansion.

#include "aho/fock.hpp"
#include "aho/rational.hpp"

#include <cmath>
#include <cstddef>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace aho {

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

struct TrajectoryMeta {
  long m = 4;
  long order = 0;        // perturbative order; -1 marks the RK4 oracle
  bool renormalized = false;
  double lambda = 0.0;
  double x0 = 0.0;
  double v0 = 0.0;
  double dt = 0.0;       // actual uniform step used
};

struct Trajectory {
  std::vector<double> t;  // strictly increasing, uniform grid
  std::vector<double> x;
  std::vector<double> v;
  TrajectoryMeta meta;
};

// ---------------------------------------------------------------------------
// Closed-form perturbative solutions
// ---------------------------------------------------------------------------

// Renormalized frequency for amplitude `amp` (v0 = 0 initial conditions):
//   m = 4: 1 + (3/8) lambda A^2 - (21/256) lambda^2 A^4   (order-2 shift)
//   m = 6: 1 + (5/16) lambda A^4                          (order-1 shift)
//   m = 8: 1 + (35/128) lambda A^6                        (order-1 shift)
inline double renormalized_frequency(long m, double amp, double lambda,
                                     long order = 2) {
  const double a2 = amp * amp;
  switch (m) {
    case 4: {
      double w = 1.0 + (3.0 / 8.0) * lambda * a2;
      if (order >= 2) w -= (21.0 / 256.0) * lambda * lambda * a2 * a2;
      return w;
    }
    case 6:
      return 1.0 + (5.0 / 16.0) * lambda * a2 * a2;
    case 8:
      return 1.0 + (35.0 / 128.0) * lambda * a2 * a2 * a2;
    default:
      throw std::domain_error("renormalized_frequency: m must be 4, 6 or 8");
  }
}

// x(t) for x'' + x + lambda*x^3 = 0 at perturbative order 0, 1 or 2.
// The renormalized branch requires v0 == 0 (the frequency-shift ansatz is
// built around a pure-cosine leading term).
inline double quartic_classical(double x0, double v0, double lambda, double t,
                                long order = 2, bool renormalized = false) {
  if (order < 0 || order > 2)
    throw std::domain_error("quartic_classical: order must be 0, 1 or 2");
  if (renormalized && v0 != 0.0)
    throw std::invalid_argument(
        "quartic_classical: renormalized form is unsupported for v0 != 0");

  if (renormalized) {
    const double A = x0;
    if (order == 0) return A * std::cos(t);
    const double w = renormalized_frequency(4, A, lambda, order);
    const double c1 = std::cos(w * t), c3 = std::cos(3 * w * t);
    double x = A * c1 - (lambda * A * A * A / 32.0) * (c1 - c3);
    if (order >= 2) {
      const double c5 = std::cos(5 * w * t);
      const double A5 = A * A * A * A * A;
      x += (lambda * lambda * A5 / 1024.0) * (c5 - 24.0 * c3 + 23.0 * c1);
    }
    return x;
  }

  const double c1 = std::cos(t), s1 = std::sin(t);
  double x = x0 * c1 + v0 * s1;
  if (order == 0) return x;

  const double c3 = std::cos(3 * t), s3 = std::sin(3 * t);
  const double x2 = x0 * x0, v2 = v0 * v0;
  x += -(lambda * x0 * x2 / 32.0) * (c1 - c3 + 12.0 * t * s1) +
       (3.0 * lambda * x2 * v0 / 32.0) * (s3 - 7.0 * s1 + 4.0 * t * c1) -
       (3.0 * lambda * x0 * v2 / 32.0) * (c3 - c1 + 4.0 * t * s1) -
       (lambda * v0 * v2 / 32.0) * (s3 + 9.0 * s1 - 12.0 * t * c1);
  if (order == 1) return x;

  const double c5 = std::cos(5 * t), s5 = std::sin(5 * t);
  const double f = lambda * lambda / 1024.0;
  const double t2 = t * t;
  const double k1 =
      f * (c5 - 36.0 * t * s3 - 24.0 * c3 - 72.0 * t2 * c1 + 96.0 * t * s1 +
           23.0 * c1);
  const double k2 =
      f * (5.0 * s5 + 108.0 * t * c3 - 132.0 * s3 - 72.0 * t2 * s1 +
           599.0 * s1 - 336.0 * t * c1);
  const double k3 =
      2.0 * f * (-5.0 * c5 + 90.0 * c3 + 36.0 * t * s3 - 72.0 * t2 * c1 -
                 85.0 * c1 + 264.0 * t * s1);
  // The +6 sin 3t coefficient follows the tabulated set as printed; the RK4
  // residual-order check documents (rather than silently alters) its effect.
  const double k4 =
      2.0 * f * (-5.0 * s5 + 36.0 * t * c3 + 6.0 * s3 - 72.0 * t2 * s1 +
                 427.0 * s1 - 456.0 * t * c1);
  const double k5 =
      f * (5.0 * c5 + 108.0 * t * s3 + 108.0 * c3 - 72.0 * t2 * c1 -
           113.0 * c1 + 240.0 * t * s1);
  const double k6 =
      f * (s5 - 36.0 * t * c3 + 48.0 * s3 - 72.0 * t2 * s1 + 271.0 * s1 -
           384.0 * t * c1);
  x += k1 * x2 * x2 * x0 + k2 * x2 * x2 * v0 + k3 * x2 * x0 * v2 +
       k4 * x2 * v0 * v2 + k5 * x0 * v2 * v2 + k6 * v0 * v2 * v2;
  return x;
}

// First-order x(t) for x'' + x + lambda*x^5 = 0.
inline double sextic_classical(double x0, double v0, double lambda, double t,
                               bool renormalized = false) {
  if (renormalized && v0 != 0.0)
    throw std::invalid_argument(
        "sextic_classical: renormalized form is unsupported for v0 != 0");

  const double c1 = std::cos(t), s1 = std::sin(t);
  const double c3 = std::cos(3 * t), s3 = std::sin(3 * t);
  const double c5 = std::cos(5 * t), s5 = std::sin(5 * t);

  if (renormalized) {
    const double a = x0;
    const double a4 = a * a * a * a;
    const double w = 1.0 + (5.0 / 16.0) * lambda * a4;
    return a * std::cos(w * t) +
           lambda * a4 * a *
               (-c1 / 24.0 + 5.0 * c3 / 128.0 + c5 / 384.0);
  }

  const double f = lambda / 384.0;
  const double l0 = f * (c5 + 15.0 * c3 - 16.0 * c1 - 120.0 * t * s1);
  const double l1 = f * (5.0 * s5 + 45.0 * s3 - 280.0 * s1 + 120.0 * t * c1);
  const double l2 =
      2.0 * f * (-5.0 * c5 - 15.0 * c3 + 20.0 * c1 - 120.0 * t * s1);
  const double l3 =
      2.0 * f * (-5.0 * s5 + 15.0 * s3 - 140.0 * s1 + 120.0 * t * c1);
  const double l4 = f * (5.0 * c5 - 45.0 * c3 + 40.0 * c1 - 120.0 * t * s1);
  const double l5 = f * (s5 - 15.0 * s3 - 80.0 * s1 + 120.0 * t * c1);

  const double x2 = x0 * x0, v2 = v0 * v0;
  return x0 * c1 + v0 * s1 + l0 * x2 * x2 * x0 + l1 * x2 * x2 * v0 +
         l2 * x2 * x0 * v2 + l3 * x2 * v0 * v2 + l4 * x0 * v2 * v2 +
         l5 * v0 * v2 * v2;
}

// First-order x(t) for x'' + x + lambda*x^7 = 0.
inline double octic_classical(double x0, double v0, double lambda, double t,
                              bool renormalized = false) {
  if (renormalized && v0 != 0.0)
    throw std::invalid_argument(
        "octic_classical: renormalized form is unsupported for v0 != 0");

  const double c1 = std::cos(t), s1 = std::sin(t);
  const double c3 = std::cos(3 * t), s3 = std::sin(3 * t);
  const double c5 = std::cos(5 * t), s5 = std::sin(5 * t);
  const double c7 = std::cos(7 * t), s7 = std::sin(7 * t);

  if (renormalized) {
    const double b = x0;
    const double b6 = b * b * b * b * b * b;
    const double w = 1.0 + (35.0 / 128.0) * lambda * b6;
    return b * std::cos(w * t) +
           (lambda * b6 * b / 3072.0) *
               (-141.0 * c1 + 126.0 * c3 + 14.0 * c5 + c7);
  }

  const double f = lambda / 3072.0;
  const double r0 = c7 + 14.0 * c5 + 126.0 * c3 - 141.0 * c1 - 840.0 * t * s1;
  const double r1 =
      7.0 * s7 + 70.0 * s5 + 378.0 * s3 - 2373.0 * s1 + 840.0 * t * c1;
  const double r2 =
      -21.0 * c7 - 126.0 * c5 - 126.0 * c3 + 273.0 * c1 - 2520.0 * t * s1;
  const double r3 =
      -35.0 * s7 - 70.0 * s5 + 630.0 * s3 - 3815.0 * s1 + 2520.0 * t * c1;
  const double r4 =
      35.0 * c7 - 70.0 * c5 - 630.0 * c3 + 665.0 * c1 - 2520.0 * t * s1;
  const double r5 =
      21.0 * s7 - 126.0 * s5 + 126.0 * s3 - 2415.0 * s1 + 2520.0 * t * c1;
  const double r6 =
      -7.0 * c7 + 70.0 * c5 - 378.0 * c3 + 315.0 * c1 - 840.0 * t * s1;
  const double r7 =
      -s7 + 14.0 * s5 - 126.0 * s3 - 525.0 * s1 + 840.0 * t * c1;

  const double x2 = x0 * x0, v2 = v0 * v0;
  const double x4 = x2 * x2, v4 = v2 * v2;
  return x0 * c1 + v0 * s1 +
         f * (r0 * x4 * x2 * x0 + r1 * x4 * x2 * v0 + r2 * x4 * x0 * v2 +
              r3 * x4 * v0 * v2 + r4 * x2 * x0 * v4 + r5 * x2 * v0 * v4 +
              r6 * x0 * v2 * v4 + r7 * v0 * v2 * v4);
}

// Uniform dispatcher used by the trajectory sampler and the CLI.  Order 0 is
// the harmonic solution for every m; orders above the tabulated range throw.
inline double classical_displacement(long m, double x0, double v0,
                                     double lambda, double t, long order,
                                     bool renormalized) {
  if (order == 0) {
    if (renormalized && v0 != 0.0)
      throw std::invalid_argument(
          "classical_displacement: renormalized form is unsupported for "
          "v0 != 0");
    return x0 * std::cos(t) + v0 * std::sin(t);
  }
  switch (m) {
    case 4:
      return quartic_classical(x0, v0, lambda, t, order, renormalized);
    case 6:
      if (order != 1)
        throw std::domain_error(
            "classical_displacement: m = 6 is tabulated at first order only");
      return sextic_classical(x0, v0, lambda, t, renormalized);
    case 8:
      if (order != 1)
        throw std::domain_error(
            "classical_displacement: m = 8 is tabulated at first order only");
      return octic_classical(x0, v0, lambda, t, renormalized);
    default:
      throw std::domain_error(
          "classical_displacement: m must be 4, 6 or 8");
  }
}

namespace detail {

// steps such that h = t_end/steps <= dt_request, with an exact final sample.
inline long trajectory_steps(double t_end, double dt_request) {
  if (!(dt_request > 0.0))
    throw std::domain_error("trajectory grid: dt must be positive");
  if (t_end < 0.0)
    throw std::domain_error("trajectory grid: t_end must be non-negative");
  if (t_end == 0.0) return 0;
  long steps = static_cast<long>(std::ceil(t_end / dt_request - 1e-12));
  if (steps < 1) steps = 1;
  if (steps > 20000000)
    throw std::domain_error("trajectory grid: more than 2e7 steps requested");
  return steps;
}

}  // namespace detail

// Samples a closed-form perturbative solution on a uniform grid.
inline Trajectory sample_perturbative(long m, double x0, double v0,
                                      double lambda, double t_end, double dt,
                                      long order, bool renormalized) {
  const long steps = detail::trajectory_steps(t_end, dt);
  const double h = steps > 0 ? t_end / steps : 0.0;
  Trajectory traj;
  traj.meta = {m, order, renormalized, lambda, x0, v0, h};
  traj.t.reserve(steps + 1);
  traj.x.reserve(steps + 1);
  for (long i = 0; i <= steps; ++i) {
    const double t = (i == steps) ? t_end : h * i;
    traj.t.push_back(t);
    traj.x.push_back(
        classical_displacement(m, x0, v0, lambda, t, order, renormalized));
  }
  return traj;
}

// ---------------------------------------------------------------------------
// RK4 oracle
// ---------------------------------------------------------------------------

inline constexpr double kEnergyDriftTol = 1e-8;

// Classic fixed-step RK4 for x'' + x + lambda*x^(m-1) = 0 with the conserved
// energy H = v^2/2 + x^2/2 + (lambda/m) x^m monitored at every sample; a
// relative drift above kEnergyDriftTol rejects the step size.
inline Trajectory rk4_oracle(long m, double x0, double v0, double lambda,
                             double t_end, double dt = 1e-3) {
  if (m < 2 || m % 2 != 0)
    throw std::domain_error("rk4_oracle: m must be an even integer >= 2");
  if (lambda < 0.0)
    throw std::domain_error("rk4_oracle: lambda must be non-negative");

  const long steps = detail::trajectory_steps(t_end, dt);
  const double h = steps > 0 ? t_end / steps : 0.0;

  const auto accel = [m, lambda](double x) {
    double p = x;
    for (long i = 0; i < m - 2; ++i) p *= x;
    return -x - lambda * p;
  };
  const auto energy = [m, lambda](double x, double v) {
    double p = 1.0;
    for (long i = 0; i < m; ++i) p *= x;
    return 0.5 * v * v + 0.5 * x * x + lambda / static_cast<double>(m) * p;
  };

  Trajectory traj;
  traj.meta = {m, -1, false, lambda, x0, v0, h};
  traj.t.reserve(steps + 1);
  traj.x.reserve(steps + 1);
  traj.v.reserve(steps + 1);

  const double h0 = energy(x0, v0);
  const double h_scale = std::abs(h0) > 0.0 ? std::abs(h0) : 1.0;
  double max_drift = 0.0;

  double x = x0, v = v0;
  traj.t.push_back(0.0);
  traj.x.push_back(x);
  traj.v.push_back(v);
  for (long i = 1; i <= steps; ++i) {
    const double k1x = v, k1v = accel(x);
    const double k2x = v + 0.5 * h * k1v, k2v = accel(x + 0.5 * h * k1x);
    const double k3x = v + 0.5 * h * k2v, k3v = accel(x + 0.5 * h * k2x);
    const double k4x = v + h * k3v, k4v = accel(x + h * k3x);
    x += h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
    v += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
    const double drift = std::abs(energy(x, v) - h0) / h_scale;
    if (drift > max_drift) max_drift = drift;
    traj.t.push_back((i == steps) ? t_end : h * i);
    traj.x.push_back(x);
    traj.v.push_back(v);
  }

  if (max_drift > kEnergyDriftTol) {
    std::ostringstream msg;
    msg << "rk4_oracle: step size rejected, relative energy drift "
        << max_drift << " exceeds " << kEnergyDriftTol
        << " (reduce dt below " << h << ")";
    throw std::runtime_error(msg.str());
  }
  return traj;
}

// Angular frequency from the zero crossings of x(t): consecutive crossings of
// an oscillation about zero are half a period apart.
inline double zero_crossing_omega(const Trajectory& traj) {
  std::vector<double> crossings;
  for (std::size_t i = 0; i + 1 < traj.x.size(); ++i) {
    const double a = traj.x[i], b = traj.x[i + 1];
    if (a == 0.0) {
      crossings.push_back(traj.t[i]);
    } else if (a * b < 0.0) {
      crossings.push_back(traj.t[i] +
                          (traj.t[i + 1] - traj.t[i]) * a / (a - b));
    }
  }
  if (!traj.x.empty() && traj.x.back() == 0.0) crossings.push_back(traj.t.back());
  if (crossings.size() < 2)
    throw std::domain_error(
        "zero_crossing_omega: need at least two zero crossings");
  return kPi * static_cast<double>(crossings.size() - 1) /
         (crossings.back() - crossings.front());
}

// ---------------------------------------------------------------------------
// Exact trig polynomials and the tuck-in transform
// ---------------------------------------------------------------------------

// Sum of terms  c * t^j * {cos,sin}(k t)  with exact rational coefficients.
// Canonical form: k >= 0, sin(0 t) dropped, zero coefficients pruned.
struct TrigPoly {
  // key: (t-power j, frequency k, is_sin)
  std::map<std::tuple<long, long, bool>, Rat> terms;

  void add(long j, long k, bool is_sin, const Rat& c) {
    if (j < 0) throw std::domain_error("TrigPoly: negative power of t");
    Rat coeff = c;
    if (k < 0) {
      k = -k;
      if (is_sin) coeff = -coeff;
    }
    if (is_sin && k == 0) return;  // sin(0) == 0
    if (coeff == 0) return;
    auto key = std::make_tuple(j, k, is_sin);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(key, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms.erase(it);
    }
  }

  Rat coeff(long j, long k, bool is_sin) const {
    auto it = terms.find(std::make_tuple(j, k, is_sin));
    return it == terms.end() ? Rat(0) : it->second;
  }

  TrigPoly& operator+=(const TrigPoly& other) {
    for (const auto& [key, c] : other.terms)
      add(std::get<0>(key), std::get<1>(key), std::get<2>(key), c);
    return *this;
  }
  friend TrigPoly operator+(TrigPoly a, const TrigPoly& b) { return a += b; }
  friend TrigPoly operator-(TrigPoly a, const TrigPoly& b) {
    return a += b.scaled(Rat(-1));
  }

  TrigPoly scaled(const Rat& s) const {
    TrigPoly out;
    if (s == 0) return out;
    for (const auto& [key, c] : terms) out.terms.emplace(key, c * s);
    return out;
  }

  // d/dt:  t^j cos(kt) -> j t^(j-1) cos(kt) - k t^j sin(kt)   (and dually)
  TrigPoly derivative() const {
    TrigPoly out;
    for (const auto& [key, c] : terms) {
      const auto [j, k, is_sin] = key;
      if (j > 0) out.add(j - 1, k, is_sin, c * j);
      if (is_sin)
        out.add(j, k, false, c * k);
      else
        out.add(j, k, true, -c * k);
    }
    return out;
  }

  TrigPoly times_t() const {
    TrigPoly out;
    for (const auto& [key, c] : terms)
      out.terms.emplace(
          std::make_tuple(std::get<0>(key) + 1, std::get<1>(key),
                          std::get<2>(key)),
          c);
    return out;
  }

  long max_t_power() const {
    long p = 0;
    for (const auto& [key, c] : terms) {
      (void)c;
      if (std::get<0>(key) > p) p = std::get<0>(key);
    }
    return p;
  }

  double eval(double t) const {
    double sum = 0.0;
    for (const auto& [key, c] : terms) {
      const auto [j, k, is_sin] = key;
      const double trig = is_sin ? std::sin(k * t) : std::cos(k * t);
      sum += to_double(c) * std::pow(t, static_cast<double>(j)) * trig;
    }
    return sum;
  }

  bool operator==(const TrigPoly& other) const { return terms == other.terms; }
};

// Perturbative series  x(t) = A cos t + lambda*first + lambda^2*second  with
// v0 = 0; `second` is optional for first-order-only inputs.
struct TuckInput {
  Rat amplitude;
  TrigPoly first;
  std::optional<TrigPoly> second;
};

// Renormalized descriptor: x(t) = A cos(w t) + lambda*first_bounded(w t)
// + lambda^2*second_bounded(t) with w = 1 + delta1*lambda + delta2*lambda^2.
struct TuckResult {
  Rat delta1;
  TrigPoly first_bounded;
  std::optional<Rat> delta2;
  std::optional<TrigPoly> second_bounded;
};

// Taylor re-expansion of the renormalized descriptor in powers of lambda at
// fixed t; returns the lambda^1 and (when present) lambda^2 coefficients.
// Used both inside tuck_in as a self-check and directly by tests.
inline std::pair<TrigPoly, std::optional<TrigPoly>> tuck_reexpand(
    const Rat& amplitude, const TuckResult& r) {
  // A cos(wt) = A cos t - A(d1 t) lambda sin t
  //             - lambda^2 (A d2 t sin t + A d1^2 t^2 cos t / 2) + O(lambda^3)
  TrigPoly first;
  first.add(1, 1, true, -amplitude * r.delta1);
  first += r.first_bounded;

  if (!r.delta2.has_value()) return {first, std::nullopt};

  TrigPoly second;
  second.add(1, 1, true, -amplitude * *r.delta2);
  second.add(2, 1, false, -amplitude * r.delta1 * r.delta1 / 2);
  // first_bounded(w t) = first_bounded(t) + d1 t first_bounded'(t) lambda + ...
  second += r.first_bounded.derivative().times_t().scaled(r.delta1);
  if (r.second_bounded.has_value()) second += *r.second_bounded;
  return {first, second};
}

// Absorbs the secular t*sin t parts of a v0 = 0 perturbative series into a
// frequency shift:
//   delta1 = -[t sin t]first / A, first_bounded = first + A delta1 t sin t,
//   R = second - (-A delta1^2 t^2 cos t / 2 + delta1 t first_bounded'),
//   delta2 = -[t sin t]R / A,    second_bounded = R + A delta2 t sin t.
// The construction is verified exactly by Taylor re-expansion before return.
inline TuckResult tuck_in(const TuckInput& in) {
  if (in.amplitude == 0)
    throw std::domain_error("tuck_in: amplitude must be nonzero");

  TuckResult out;
  out.delta1 = -in.first.coeff(1, 1, true) / in.amplitude;
  out.first_bounded = in.first;
  out.first_bounded.add(1, 1, true, in.amplitude * out.delta1);

  if (in.second.has_value()) {
    TrigPoly correction;
    correction.add(2, 1, false,
                   -in.amplitude * out.delta1 * out.delta1 / 2);
    correction +=
        out.first_bounded.derivative().times_t().scaled(out.delta1);
    TrigPoly r = *in.second - correction;
    out.delta2 = -r.coeff(1, 1, true) / in.amplitude;
    out.second_bounded = r;
    out.second_bounded->add(1, 1, true, in.amplitude * *out.delta2);
  }

  const auto [first, second] = tuck_reexpand(in.amplitude, out);
  if (!(first == in.first))
    throw std::logic_error("tuck_in: first-order re-expansion mismatch");
  if (in.second.has_value() &&
      !(second.has_value() && *second == *in.second))
    throw std::logic_error("tuck_in: second-order re-expansion mismatch");
  return out;
}

// Exact v0 = 0 series descriptors for the three tabulated oscillators.

inline TuckInput quartic_tuck_input(const Rat& amp) {
  const Rat a3 = amp * amp * amp;
  const Rat a5 = a3 * amp * amp;
  TuckInput in;
  in.amplitude = amp;
  in.first.add(0, 1, false, -a3 / 32);
  in.first.add(0, 3, false, a3 / 32);
  in.first.add(1, 1, true, -a3 * 12 / 32);
  TrigPoly second;
  second.add(0, 5, false, a5 / 1024);
  second.add(1, 3, true, -a5 * 36 / 1024);
  second.add(0, 3, false, -a5 * 24 / 1024);
  second.add(2, 1, false, -a5 * 72 / 1024);
  second.add(1, 1, true, a5 * 96 / 1024);
  second.add(0, 1, false, a5 * 23 / 1024);
  in.second = second;
  return in;
}

inline TuckInput sextic_tuck_input(const Rat& amp) {
  const Rat a5 = amp * amp * amp * amp * amp;
  TuckInput in;
  in.amplitude = amp;
  in.first.add(0, 5, false, a5 / 384);
  in.first.add(0, 3, false, a5 * 15 / 384);
  in.first.add(0, 1, false, -a5 * 16 / 384);
  in.first.add(1, 1, true, -a5 * 120 / 384);
  return in;
}

inline TuckInput octic_tuck_input(const Rat& amp) {
  const Rat a7 = amp * amp * amp * amp * amp * amp * amp;
  TuckInput in;
  in.amplitude = amp;
  in.first.add(0, 7, false, a7 / 3072);
  in.first.add(0, 5, false, a7 * 14 / 3072);
  in.first.add(0, 3, false, a7 * 126 / 3072);
  in.first.add(0, 1, false, -a7 * 141 / 3072);
  in.first.add(1, 1, true, -a7 * 840 / 3072);
  return in;
}

}  // namespace aho
