#include <catch2/catch_amalgamated.hpp>

#include "aho/classical.hpp"

#include <cmath>

using namespace aho;
using Catch::Approx;

namespace {

// Largest |closed-form - RK4| over [0, t_end], sampled every 10th oracle node.
double sup_residual(long m, double x0, double v0, double lambda, double t_end,
                    long order, bool renormalized) {
  const Trajectory ex = rk4_oracle(m, x0, v0, lambda, t_end, 1e-3);
  double worst = 0.0;
  for (std::size_t i = 0; i < ex.t.size(); i += 10) {
    const double xp =
        classical_displacement(m, x0, v0, lambda, ex.t[i], order, renormalized);
    worst = std::max(worst, std::abs(xp - ex.x[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("lambda = 0 reduces every solution to the harmonic one") {
  for (double t : {0.0, 0.7, 2.9, 11.3}) {
    const double h = 1.3 * std::cos(t) - 0.4 * std::sin(t);
    REQUIRE(quartic_classical(1.3, -0.4, 0.0, t, 2, false) == Approx(h).margin(1e-14));
    REQUIRE(sextic_classical(1.3, -0.4, 0.0, t, false) == Approx(h).margin(1e-14));
    REQUIRE(octic_classical(1.3, -0.4, 0.0, t, false) == Approx(h).margin(1e-14));
    // Renormalized forms at lambda = 0 (v0 = 0 contract).
    REQUIRE(quartic_classical(1.3, 0.0, 0.0, t, 2, true) ==
            Approx(1.3 * std::cos(t)).margin(1e-14));
    REQUIRE(sextic_classical(1.3, 0.0, 0.0, t, true) ==
            Approx(1.3 * std::cos(t)).margin(1e-14));
    REQUIRE(octic_classical(1.3, 0.0, 0.0, t, true) ==
            Approx(1.3 * std::cos(t)).margin(1e-14));
  }
}

TEST_CASE("initial conditions are preserved at every order") {
  for (long order : {0L, 1L, 2L}) {
    REQUIRE(quartic_classical(1.7, 0.9, 0.08, 0.0, order, false) == Approx(1.7).margin(1e-14));
  }
  REQUIRE(sextic_classical(1.7, 0.9, 0.08, 0.0, false) == Approx(1.7).margin(1e-14));
  REQUIRE(octic_classical(1.2, 0.9, 0.08, 0.0, false) == Approx(1.2).margin(1e-14));
  // Velocity: central difference at t = 0 of the order-2 quartic solution.
  const double eps = 1e-6;
  const double vdot = (quartic_classical(1.7, 0.9, 0.08, eps, 2, false) -
                       quartic_classical(1.7, 0.9, 0.08, -eps, 2, false)) /
                      (2 * eps);
  REQUIRE(vdot == Approx(0.9).margin(1e-8));
}

TEST_CASE("renormalized forms reject v0 != 0 and bad orders throw") {
  REQUIRE_THROWS_AS(quartic_classical(1.0, 0.5, 0.1, 1.0, 2, true), std::invalid_argument);
  REQUIRE_THROWS_AS(sextic_classical(1.0, 0.5, 0.1, 1.0, true), std::invalid_argument);
  REQUIRE_THROWS_AS(octic_classical(1.0, 0.5, 0.1, 1.0, true), std::invalid_argument);
  REQUIRE_THROWS_AS(quartic_classical(1.0, 0.0, 0.1, 1.0, 3, false), std::domain_error);
  REQUIRE_THROWS_AS(classical_displacement(6, 1.0, 0.0, 0.1, 1.0, 2, false), std::domain_error);
  REQUIRE_THROWS_AS(classical_displacement(8, 1.0, 0.0, 0.1, 1.0, 2, false), std::domain_error);
  REQUIRE_THROWS_AS(classical_displacement(5, 1.0, 0.0, 0.1, 1.0, 1, false), std::domain_error);
  REQUIRE_THROWS_AS(renormalized_frequency(5, 1.0, 0.1), std::domain_error);
}

TEST_CASE("renormalized frequency closed forms") {
  // m = 4, A = 2, lambda = 0.05: 1 + 3/8*0.05*4 - 21/256*0.0025*16.
  REQUIRE(renormalized_frequency(4, 2.0, 0.05) == Approx(1.07171875).margin(1e-15));
  REQUIRE(renormalized_frequency(4, 2.0, 0.05, 1) == Approx(1.075).margin(1e-15));
  REQUIRE(renormalized_frequency(6, 1.0, 0.2) == Approx(1.0 + 0.2 * 5.0 / 16.0).margin(1e-15));
  REQUIRE(renormalized_frequency(8, 1.0, 0.2) == Approx(1.0 + 0.2 * 35.0 / 128.0).margin(1e-15));
}

TEST_CASE("RK4 oracle: free oscillator, energy drift, step rejection, grids") {
  // lambda = 0 against cos t over [0, 50].
  const Trajectory free_tr = rk4_oracle(4, 1.0, 0.0, 0.0, 50.0);
  double worst = 0.0;
  for (std::size_t i = 0; i < free_tr.t.size(); ++i)
    worst = std::max(worst, std::abs(free_tr.x[i] - std::cos(free_tr.t[i])));
  REQUIRE(worst < 1e-9);

  // Strictly increasing uniform grid ending exactly at t_end.
  REQUIRE(free_tr.t.front() == 0.0);
  REQUIRE(free_tr.t.back() == 50.0);
  for (std::size_t i = 0; i + 1 < free_tr.t.size(); ++i)
    REQUIRE(free_tr.t[i] < free_tr.t[i + 1]);
  REQUIRE(free_tr.meta.order == -1);

  // Default step keeps the anharmonic energy drift far inside tolerance;
  // a coarse step is rejected with the step-size message.
  const Trajectory tr = rk4_oracle(4, 2.0, 0.0, 0.05, 50.0);
  const double h0 = 0.5 * 4.0 + 0.05 / 4.0 * 16.0;
  double drift = 0.0;
  for (std::size_t i = 0; i < tr.t.size(); ++i) {
    const double h = 0.5 * tr.v[i] * tr.v[i] + 0.5 * tr.x[i] * tr.x[i] +
                     0.05 / 4.0 * std::pow(tr.x[i], 4);
    drift = std::max(drift, std::abs(h - h0) / h0);
  }
  REQUIRE(drift < 1e-10);
  REQUIRE_THROWS_WITH(rk4_oracle(4, 2.0, 0.0, 0.05, 50.0, 0.05),
                      Catch::Matchers::ContainsSubstring("step size rejected"));

  REQUIRE_THROWS_AS(rk4_oracle(5, 1.0, 0.0, 0.1, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(rk4_oracle(4, 1.0, 0.0, -0.1, 1.0), std::domain_error);
  REQUIRE_THROWS_AS(rk4_oracle(4, 1.0, 0.0, 0.1, 1.0, 0.0), std::domain_error);
}

TEST_CASE("RK4 oracle: halving the step divides the global error by ~16") {
  const Trajectory ref = rk4_oracle(4, 2.0, 0.0, 0.05, 10.0, 2.5e-4);
  const Trajectory coarse = rk4_oracle(4, 2.0, 0.0, 0.05, 10.0, 4e-3);
  const Trajectory fine = rk4_oracle(4, 2.0, 0.0, 0.05, 10.0, 2e-3);
  const double e_coarse = std::abs(coarse.x.back() - ref.x.back());
  const double e_fine = std::abs(fine.x.back() - ref.x.back());
  REQUIRE(e_coarse / e_fine == Approx(16.0).margin(1.0));
}

TEST_CASE("residual against the oracle scales as lambda^(order+1)") {
  struct Case {
    long m;
    double x0, v0;
    long order;
    bool renormalized;
    double expect;
  };
  // Halving lambda divides an O(lambda^(k+1)) residual by 2^(k+1).
  const Case cases[] = {
      {4, 1.0, 0.0, 1, false, 4.0}, {4, 1.0, 0.0, 2, false, 8.0},
      {4, 1.0, 0.7, 1, false, 4.0}, {4, 1.0, 0.7, 2, false, 8.0},
      {4, 1.0, 0.0, 1, true, 4.0},  {4, 1.0, 0.0, 2, true, 8.0},
      {6, 1.0, 0.0, 1, false, 4.0}, {6, 1.0, 0.4, 1, false, 4.0},
      {8, 1.0, 0.0, 1, false, 4.0}, {8, 1.0, 0.4, 1, false, 4.0},
  };
  for (const Case& c : cases) {
    CAPTURE(c.m, c.v0, c.order, c.renormalized);
    const double e1 = sup_residual(c.m, c.x0, c.v0, 0.02, 20.0, c.order, c.renormalized);
    const double e2 = sup_residual(c.m, c.x0, c.v0, 0.01, 20.0, c.order, c.renormalized);
    const double margin = c.expect == 4.0 ? 0.5 : 1.5;
    REQUIRE(e1 / e2 == Approx(c.expect).margin(margin));
  }
}

TEST_CASE("long-horizon comparison at A = 2, lambda = 0.05") {
  const Trajectory ex = rk4_oracle(4, 2.0, 0.0, 0.05, 50.0);
  double worst_ren = 0.0, worst_unren = 0.0;
  for (std::size_t i = 0; i < ex.t.size(); ++i) {
    worst_ren = std::max(
        worst_ren, std::abs(quartic_classical(2.0, 0.0, 0.05, ex.t[i], 2, true) - ex.x[i]));
    worst_unren = std::max(
        worst_unren, std::abs(quartic_classical(2.0, 0.0, 0.05, ex.t[i], 2, false) - ex.x[i]));
  }
  // The frequency-renormalized solution stays uniformly close while the
  // secular-term form drifts out of phase and overshoots in amplitude.
  REQUIRE(worst_ren <= 0.05);
  REQUIRE(worst_unren > 0.5);

  // The oscillation frequency read off the oracle's zero crossings matches
  // the renormalized closed form to well under 0.5%.
  const double om_hat = zero_crossing_omega(ex);
  REQUIRE(std::abs(om_hat - 1.07171875) / 1.07171875 < 5e-3);
}

TEST_CASE("zero-crossing frequencies match first-order shifts for m = 6, 8") {
  for (long m : {6L, 8L}) {
    // lambda * A^(m-2) = 0.2 with A = 1.
    const Trajectory ex = rk4_oracle(m, 1.0, 0.0, 0.2, 50.0);
    const double om_hat = zero_crossing_omega(ex);
    const double om = renormalized_frequency(m, 1.0, 0.2);
    CAPTURE(m, om_hat, om);
    REQUIRE(std::abs(om_hat - om) / om < 5e-3);
  }
  REQUIRE_THROWS_AS(zero_crossing_omega(Trajectory{}), std::domain_error);
}

TEST_CASE("renormalized trajectory stays bounded at lambda A^2 = 0.5") {
  double worst = 0.0;
  for (double t = 0.0; t <= 50.0; t += 0.01)
    worst = std::max(worst, std::abs(quartic_classical(2.0, 0.0, 0.125, t, 2, true)));
  REQUIRE(worst <= 2.05);
}

TEST_CASE("trajectory sampler mirrors the closed form on the oracle grid") {
  const Trajectory p = sample_perturbative(6, 1.1, 0.0, 0.03, 8.0, 1e-2, 1, true);
  REQUIRE(p.t.size() == 801);
  REQUIRE(p.t.back() == 8.0);
  REQUIRE(p.meta.renormalized);
  REQUIRE(p.x[400] == Approx(sextic_classical(1.1, 0.0, 0.03, p.t[400], true)).margin(1e-15));
}

TEST_CASE("tuck-in absorbs quartic secular growth into the frequency shift") {
  for (const Rat& amp : {Rat(2), Rat(3, 2)}) {
    const TuckResult r = tuck_in(quartic_tuck_input(amp));
    const Rat a3 = amp * amp * amp;
    const Rat a5 = a3 * amp * amp;

    REQUIRE(r.delta1 == Rat(3) * amp * amp / 8);
    REQUIRE(r.delta2.has_value());
    REQUIRE(*r.delta2 == Rat(-21) * amp * amp * amp * amp / 256);

    // Bounded remainders: -(A^3/32)(cos t - cos 3t) and
    // (A^5/1024)(cos 5t - 24 cos 3t + 23 cos t).
    TrigPoly t1;
    t1.add(0, 1, false, -a3 / 32);
    t1.add(0, 3, false, a3 / 32);
    REQUIRE(r.first_bounded == t1);
    TrigPoly t2;
    t2.add(0, 5, false, a5 / 1024);
    t2.add(0, 3, false, -a5 * 24 / 1024);
    t2.add(0, 1, false, a5 * 23 / 1024);
    REQUIRE(r.second_bounded.has_value());
    REQUIRE(*r.second_bounded == t2);
    REQUIRE(r.first_bounded.max_t_power() == 0);
    REQUIRE(r.second_bounded->max_t_power() == 0);
  }
}

TEST_CASE("tuck-in reproduces the first-order sextic and octic shifts") {
  const TuckResult s = tuck_in(sextic_tuck_input(Rat(1)));
  REQUIRE(s.delta1 == Rat(5, 16));
  REQUIRE(!s.delta2.has_value());
  TrigPoly sb;
  sb.add(0, 5, false, Rat(1, 384));
  sb.add(0, 3, false, Rat(5, 128));
  sb.add(0, 1, false, Rat(-1, 24));
  REQUIRE(s.first_bounded == sb);

  const TuckResult o = tuck_in(octic_tuck_input(Rat(1)));
  REQUIRE(o.delta1 == Rat(35, 128));
  TrigPoly ob;
  ob.add(0, 7, false, Rat(1, 3072));
  ob.add(0, 5, false, Rat(14, 3072));
  ob.add(0, 3, false, Rat(126, 3072));
  ob.add(0, 1, false, Rat(-141, 3072));
  REQUIRE(o.first_bounded == ob);
}

TEST_CASE("tuck-in is the identity on secular-free input") {
  TuckInput in;
  in.amplitude = Rat(2);
  in.first.add(0, 3, false, Rat(1, 7));
  in.first.add(0, 5, true, Rat(-2, 9));
  const TuckResult r = tuck_in(in);
  REQUIRE(r.delta1 == Rat(0));
  REQUIRE(r.first_bounded == in.first);
  REQUIRE_THROWS_AS(tuck_in(TuckInput{Rat(0), {}, std::nullopt}), std::domain_error);
}

TEST_CASE("tuck-in re-expansion returns the original series exactly") {
  const TuckInput in = quartic_tuck_input(Rat(5, 3));
  const TuckResult r = tuck_in(in);  // throws internally on mismatch
  const auto [first, second] = tuck_reexpand(in.amplitude, r);
  REQUIRE(first == in.first);
  REQUIRE(second.has_value());
  REQUIRE(*second == *in.second);
}

TEST_CASE("tucked descriptor evaluates close to the renormalized closed form") {
  // Rebuild x(t) from the tuck descriptor at A = 2, lambda = 0.05 and compare
  // with quartic_classical(renormalized): same frequency shift and harmonics,
  // differing only in whether the remainders rotate at w or at 1.
  const TuckResult r = tuck_in(quartic_tuck_input(Rat(2)));
  const double lam = 0.05;
  const double w = 1.0 + to_double(r.delta1) * lam + to_double(*r.delta2) * lam * lam;
  REQUIRE(w == Approx(renormalized_frequency(4, 2.0, 0.05)).margin(1e-15));
  for (double t : {0.9, 7.7, 31.4}) {
    const double rebuilt = 2.0 * std::cos(w * t) +
                           lam * r.first_bounded.eval(w * t) +
                           lam * lam * r.second_bounded->eval(w * t);
    REQUIRE(rebuilt == Approx(quartic_classical(2.0, 0.0, lam, t, 2, true)).margin(1e-14));
  }
}
