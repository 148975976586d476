#include <catch2/catch_amalgamated.hpp>

#include "aho/evolution.hpp"

#include <cmath>
#include <complex>

using namespace aho;
using Catch::Approx;

namespace {
double interior_diff(const Mat& A, const Mat& B, long keep) {
  return (A.topLeftCorner(keep, keep) - B.topLeftCorner(keep, keep)).norm();
}
double interior_norm(const Mat& A, long keep) { return A.topLeftCorner(keep, keep).norm(); }
} // namespace

TEST_CASE("quartic D coefficients: limits and symmetry zeros") {
  const cplx I(0.0, 1.0);
  // t = 0: only the identity coefficient survives.
  auto d0 = quartic_d_coeffs(0.3, 0.0);
  REQUIRE(std::abs(d0.D1 - 1.0) < 1e-15);
  for (cplx c : {d0.D2, d0.D3, d0.D4, d0.D5, d0.D6}) REQUIRE(std::abs(c) < 1e-15);

  // lambda = 0: free rotation only.
  auto dfree = quartic_d_coeffs(0.0, 1.7);
  REQUIRE(std::abs(dfree.D1 - std::exp(-I * 1.7)) < 1e-15);
  for (cplx c : {dfree.D2, dfree.D3, dfree.D4, dfree.D5, dfree.D6}) REQUIRE(std::abs(c) < 1e-15);

  // t = pi: every sin t factor vanishes, the secular piece does not.
  auto dpi = quartic_d_coeffs(0.1, kPi);
  REQUIRE(std::abs(dpi.D2) < 1e-14);
  REQUIRE(std::abs(dpi.D3) < 1e-14);
  REQUIRE(std::abs(dpi.D4) < 1e-14);
  REQUIRE(std::abs(dpi.D5) < 1e-14);
  REQUIRE(std::abs(dpi.D6) == Approx(0.1 * 3.0 / 4.0 * kPi).epsilon(1e-12));

  // Magnitudes: |D1|^2 = 1 + (3 lambda t / 4)^2, the rest are O(lambda).
  auto d = quartic_d_coeffs(0.05, 2.3);
  REQUIRE(std::norm(d.D1) == Approx(1.0 + std::pow(0.05 * 3.0 / 4.0 * 2.3, 2)).epsilon(1e-12));
  REQUIRE(std::abs(d.D3) == Approx(0.05 / 4.0 * std::abs(std::sin(2.3))).epsilon(1e-12));
}

TEST_CASE("general-m first-order evolution reduces to the quartic D form") {
  const long dim = 24;
  for (double t : {0.0, 0.8, 2.5, 5.0}) {
    OscillatorSpec spec(4, 0.03, dim);
    Mat general = a_first_order(spec, t);
    Mat assembled = quartic_a_assembled(quartic_d_coeffs(0.03, t), dim);
    REQUIRE((general - assembled).norm() < 1e-12);
  }
}

TEST_CASE("first-order evolution at lambda = 0 is the free rotation") {
  const cplx I(0.0, 1.0);
  for (long m : {4L, 6L, 8L}) {
    OscillatorSpec spec(m, 0.0, 32);
    auto [a, ad] = ladder_ops(32);
    Mat evolved = a_first_order(spec, 1.3);
    REQUIRE((evolved - std::exp(-I * 1.3) * a).norm() < 1e-14);
  }
}

TEST_CASE("first-order evolution misses the exact propagator at second order") {
  // lambda is pinned per m so the first-order phase lambda*omega(m, n)*t stays
  // perturbative (~0.1) across the compared block; at fixed lambda the m = 6
  // frequencies (~n^2) leave the window and the scaling ratio degrades.
  const long dim = 48;
  const long keep = 16;
  auto [a, ad] = ladder_ops(dim);
  for (long m : {4L, 6L}) {
    const double om = to_double(level_spacing_poly(m).eval(Rat(keep)));
    const double lam = 0.1 / (om * 5.0);
    for (double t : {1.0, 5.0}) {
      OscillatorSpec s1(m, lam, dim), s2(m, lam / 2.0, dim);
      const double r1 = interior_diff(a_first_order(s1, t), heisenberg_exact(hamiltonian(s1), a, t), keep);
      const double r2 = interior_diff(a_first_order(s2, t), heisenberg_exact(hamiltonian(s2), a, t), keep);
      INFO("m=" << m << " t=" << t << " r1=" << r1 << " r2=" << r2);
      REQUIRE(r1 / r2 == Approx(4.0).margin(0.5));
    }
  }
}

TEST_CASE("first-order evolution preserves the ladder commutator to O(lambda^2)") {
  // a(t) is exactly linear in lambda, and the O(lambda) commutator correction
  // cancels identically, so [a(t), a(t)^dag] - 1 is pure lambda^2 and the
  // halving ratio is exact.  The residual itself is large on high levels
  // because the second-order products grow like n^(m-1).
  const long dim = 40;
  const long keep = 16;
  auto resid = [&](double lam) {
    OscillatorSpec spec(6, lam, dim);
    Mat A = a_first_order(spec, 2.0);
    Mat comm = A * A.adjoint() - A.adjoint() * A;
    return interior_diff(comm, Mat::Identity(dim, dim), keep);
  };
  const double r1 = resid(4e-3), r2 = resid(2e-3);
  REQUIRE(r1 < 100.0);
  REQUIRE(r1 / r2 == Approx(4.0).margin(0.05));
}

TEST_CASE("secular-removed evolution agrees with the plain first-order form to O(lambda^2)") {
  const long dim = 40;
  const long keep = 16;
  for (long m : {4L, 6L}) {
    const double om = to_double(level_spacing_poly(m).eval(Rat(keep)));
    const double lam = 0.1 / (om * 3.0); // keep the dressed phase perturbative on the block
    auto gap = [&](double l) {
      OscillatorSpec spec(m, l, dim);
      return interior_diff(a_secular_removed(spec, 3.0), a_first_order(spec, 3.0), keep);
    };
    const double r1 = gap(lam), r2 = gap(lam / 2.0);
    REQUIRE(r1 / r2 == Approx(4.0).margin(0.2));
  }
}

TEST_CASE("secular-removed evolution stays bounded where the plain form grows") {
  const long dim = 32;
  const long keep = 16;
  const double lam = 0.05;
  OscillatorSpec spec(4, lam, dim);
  const double t_long = 10.0 / lam;
  const double bounded = interior_norm(a_secular_removed(spec, t_long), keep);
  const double secular = interior_norm(a_first_order(spec, t_long), keep);
  const double reference = interior_norm(ladder_ops(dim).first, keep);
  REQUIRE(secular > 5.0 * bounded);     // the resonant term has grown by ~lambda' t
  REQUIRE(bounded < 3.0 * reference);   // the resummed form stays ladder-sized
  REQUIRE_FALSE(secular_window_ok(lam, t_long));
  REQUIRE(secular_window_ok(lam, 0.3 / lam));
}

TEST_CASE("secular-removed subdiagonal rotates at the dressed level frequency") {
  // <n-1| a(t) |n> = sqrt(n) exp(-i t (1 + lambda * omega(m, n))) exactly:
  // the off-resonant terms never reach the first subdiagonal.
  const long dim = 32;
  const double lam = 0.05;
  for (long m : {4L, 6L, 8L, 10L}) {
    OscillatorSpec spec(m, lam, dim);
    for (double t : {0.7, 2.0, 9.0}) {
      Mat A = a_secular_removed(spec, t);
      for (long n : {1L, 3L, 6L}) {
        const double omega = to_double(level_spacing_poly(m).eval(Rat(n)));
        const cplx expected =
            std::sqrt(static_cast<double>(n)) * std::exp(cplx(0.0, -t * (1.0 + lam * omega)));
        REQUIRE(std::abs(A(n - 1, n) - expected) < 1e-12);
      }
    }
  }
}

TEST_CASE("frequency-operator placement variants differ only at O(lambda^2)") {
  const long dim = 32;
  const long keep = 16;
  const double om = to_double(level_spacing_poly(6).eval(Rat(keep)));
  const double lam = 0.1 / (om * 4.0);
  auto spread = [&](double l) {
    OscillatorSpec s(6, l, dim);
    Mat mid = a_secular_removed(s, 4.0, OmegaPlacement::mid);
    Mat left = a_secular_removed(s, 4.0, OmegaPlacement::left);
    Mat right = a_secular_removed(s, 4.0, OmegaPlacement::right);
    return std::max(interior_diff(mid, left, keep), interior_diff(mid, right, keep));
  };
  const double r1 = spread(lam), r2 = spread(lam / 2.0);
  REQUIRE(r1 > 0.0);
  REQUIRE(r1 / r2 == Approx(4.0).margin(0.2));
}

TEST_CASE("evolved number operators: free limit, Hermiticity, exact-operator residual") {
  const long dim = 40;
  const long keep = 20;

  // lambda = 0 freezes N and N^2 (both commute with H0).
  auto frozen = number_evolved(2.0, 0.4, 0.0, 3.1, dim);
  Mat N = number_op(dim);
  REQUIRE((frozen.N - N).norm() < 1e-12);
  REQUIRE((frozen.N2 - N * N).norm() < 1e-12);

  auto ev = number_evolved(2.0, 0.4, 0.02, 2.7, dim);
  REQUIRE((ev.N - ev.N.adjoint()).norm() < 1e-12);
  REQUIRE((ev.N2 - ev.N2.adjoint()).norm() < 1e-12);

  // First-order truncation: residual against the exact Heisenberg N(t) is O(lambda^2).
  auto resid = [&](double lam) {
    OscillatorSpec spec(4, lam, dim);
    Mat exact = heisenberg_exact(hamiltonian(spec), N, 2.7);
    return interior_diff(number_evolved(2.0, 0.4, lam, 2.7, dim).N, exact, keep);
  };
  const double r1 = resid(2e-3), r2 = resid(1e-3);
  REQUIRE(r1 / r2 == Approx(4.0).margin(0.6));
}

TEST_CASE("evolved number operator reproduces the coherent-state mean and variance") {
  const double N0 = 2.0, theta = 0.4;
  const long dim = default_dim(4, std::sqrt(N0));
  FockState alpha = coherent_state(std::sqrt(N0), theta, dim);

  auto mean_closed = [&](double lam, double t) {
    return N0 * (1.0 + (lam / 4.0) * (2.0 * (3.0 + 2.0 * N0) * std::sin(t) * std::sin(t - 2.0 * theta) +
                                      N0 * std::sin(2.0 * t) * std::sin(2.0 * (t - 2.0 * theta))));
  };
  auto var_closed = [&](double lam, double t) {
    return N0 * (1.0 + lam * ((3.0 + 4.0 * N0) * std::sin(t) * std::sin(t - 2.0 * theta) +
                              N0 * std::sin(2.0 * t) * std::sin(2.0 * (t - 2.0 * theta))));
  };

  for (double t : {0.9, 2.2, 4.8}) {
    const double lam = 0.01;
    auto ev = number_evolved(N0, theta, lam, t, dim);
    const double mean = expectation(ev.N, alpha).real();
    REQUIRE(mean == Approx(mean_closed(lam, t)).margin(1e-10));

    // The matrix variance carries O(lambda^2) cross terms the closed form drops.
    const double var1 = expectation(ev.N2, alpha).real() - mean * mean;
    const double gap1 = std::abs(var1 - var_closed(lam, t));
    auto ev2 = number_evolved(N0, theta, lam / 2.0, t, dim);
    const double mean2 = expectation(ev2.N, alpha).real();
    const double var2 = expectation(ev2.N2, alpha).real() - mean2 * mean2;
    const double gap2 = std::abs(var2 - var_closed(lam / 2.0, t));
    REQUIRE(gap1 < 50.0 * lam * lam);
    REQUIRE(gap1 / gap2 == Approx(4.0).margin(1.0));
  }

  // At t = 2 theta both modulation factors vanish: the mean returns to N0.
  auto ev = number_evolved(N0, theta, 0.01, 2.0 * theta, dim);
  REQUIRE(expectation(ev.N, alpha).real() == Approx(N0).margin(1e-10));
}

TEST_CASE("dressed position operator: free limit and structure") {
  const long dim = 24;
  OscillatorSpec spec(4, 0.0, dim);
  Mat X0 = mspt_position(spec, 1.1);
  Mat expected = std::cos(1.1) * x_op(dim) + std::sin(1.1) * xdot_op(dim);
  REQUIRE((X0 - expected).norm() < 1e-13);

  OscillatorSpec aspec(6, 0.04, dim);
  Mat Xa = mspt_position(aspec, 2.3);
  REQUIRE((Xa - Xa.adjoint()).norm() < 1e-12);
  // Strictly tridiagonal with a vanishing diagonal.
  for (long j = 0; j < dim; ++j) {
    for (long k = 0; k < dim; ++k) {
      if (std::abs(j - k) != 1) REQUIRE(std::abs(Xa(j, k)) < 1e-15);
    }
  }
}

TEST_CASE("dressed position subdiagonal oscillates at the first-order level spacing") {
  // The normalizer cancels the cos(delta Phi / 2) envelope exactly:
  // <n-1| X0(t) |n> = sqrt(n/2) exp(-i t (1 + lambda omega(m, n))).
  const double lam = 0.05;
  const long dim = 28;
  for (long m : {4L, 6L, 8L, 10L}) {
    OscillatorSpec spec(m, lam, dim);
    for (double t : {0.6, 1.9, 7.3}) {
      Mat X0 = mspt_position(spec, t);
      for (long n : {1L, 2L, 5L}) {
        const double omega = to_double(level_spacing_poly(m).eval(Rat(n)));
        const cplx expected = std::sqrt(static_cast<double>(n) / 2.0) *
                              std::exp(cplx(0.0, -t * (1.0 + lam * omega)));
        // tolerance absorbs trig roundoff at the large dressed phases of m = 10
        REQUIRE(std::abs(X0(n - 1, n) - expected) < 1e-11);
      }
    }
  }
}

TEST_CASE("dressed position misses only the O(lambda) harmonic content") {
  // X0 keeps the fundamental with a dressed frequency and drops the O(lambda)
  // third-harmonic terms, so its residual against the exact Heisenberg X(t)
  // scales linearly in lambda.
  const long dim = 48;
  const long keep = 12;
  auto resid = [&](double lam, double t) {
    OscillatorSpec spec(4, lam, dim);
    Mat exact = heisenberg_exact(hamiltonian(spec), x_op(dim), t);
    return interior_diff(mspt_position(spec, t), exact, keep);
  };
  const double r1 = resid(2e-3, 2.0), r2 = resid(1e-3, 2.0);
  REQUIRE(r1 < 0.2);
  REQUIRE(r1 / r2 == Approx(2.0).margin(0.3));
}

TEST_CASE("dressed position outlasts the plain first-order form at large lambda t") {
  // The resummed fundamental does not grow secularly; the plain first-order
  // quadrature does.  At lambda t >= 0.2 the plain form has already lost.
  const long dim = 48;
  const long keep = 8;
  const double lam = 0.01;
  OscillatorSpec spec(4, lam, dim);
  Mat H = hamiltonian(spec);
  for (double t : {20.0, 40.0}) {
    Mat exact = heisenberg_exact(H, x_op(dim), t);
    Mat A = a_first_order(spec, t);
    Mat plainX = (A + Mat(A.adjoint())) / std::sqrt(2.0);
    const double dressed = interior_diff(mspt_position(spec, t), exact, keep);
    const double plain = interior_diff(plainX, exact, keep);
    INFO("t=" << t << " dressed=" << dressed << " plain=" << plain);
    REQUIRE(plain > 3.0 * dressed);
  }
}

TEST_CASE("harmonic content of the first-order trajectories") {
  REQUIRE(harmonic_content(4) == std::vector<long>{3});
  REQUIRE(harmonic_content(6) == std::vector<long>{3, 5});
  REQUIRE(harmonic_content(8) == std::vector<long>{3, 5, 7});
  REQUIRE(harmonic_content(10) == std::vector<long>{3, 5, 7, 9});
  REQUIRE_THROWS_AS(harmonic_content(5), std::domain_error);
  REQUIRE_THROWS_AS(harmonic_content(2), std::domain_error);
}
