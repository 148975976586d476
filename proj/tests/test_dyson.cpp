#include <catch2/catch_amalgamated.hpp>

#include "aho/dyson.hpp"
#include "aho/observables.hpp"

using namespace aho;
using Catch::Approx;

namespace {

// E-coefficient of the monomial a^dag^p a^q in X(t) at a given lambda' grade,
// rescaled to powers of lambda (lambda' = lambda / 16 for m = 4).
cplx e_coeff(const SecondOrderSolution& sol, double t, long p, long q, int grade) {
  cplx direct(0.0, 0.0), partner(0.0, 0.0);
  if (auto it = sol.coeff.find({p, q}); it != sol.coeff.end()) direct = it->second[grade];
  if (auto it = sol.coeff.find({q, p}); it != sol.coeff.end()) partner = it->second[grade];
  const cplx ph = std::exp(cplx(0.0, -t));
  return (ph * direct + std::conj(ph * partner)) / std::sqrt(2.0) *
         std::pow(1.0 / 16.0, grade);
}

Mat assemble(const SecondOrderSolution& sol, double t, double lambda_prime, long dim,
             int max_grade) {
  auto [a, ad] = ladder_ops(dim);
  Mat out = Mat::Zero(dim, dim);
  for (const auto& [mono, grades] : sol.coeff) {
    cplx w(0.0, 0.0);
    for (int g = 0; g <= max_grade; ++g) w += std::pow(lambda_prime, g) * grades[g];
    if (w == cplx(0.0, 0.0)) continue;
    out += w * (matrix_power(ad, mono.first) * matrix_power(a, mono.second));
  }
  return std::exp(cplx(0.0, -t)) * out;
}

} // namespace

TEST_CASE("trig-polynomial integration matches numerical quadrature") {
  dyson::TrigFn f;
  dyson::add_term(f, 0, 2, cplx(0.7, -0.3));
  dyson::add_term(f, 1, -1, cplx(-1.2, 0.5));
  dyson::add_term(f, 2, 0, cplx(0.4, 1.1));
  dyson::add_term(f, 2, 3, cplx(0.9, 0.0));
  const dyson::TrigFn F = dyson::integrate(f);
  for (double t : {0.7, 2.3}) {
    // Simpson's rule on a fine grid
    const int n = 2000;
    const double h = t / n;
    cplx acc = dyson::eval(f, 0.0) + dyson::eval(f, t);
    for (int i = 1; i < n; ++i) acc += dyson::eval(f, i * h) * ((i % 2) ? 4.0 : 2.0);
    acc *= h / 3.0;
    REQUIRE(std::abs(dyson::eval(F, t) - acc) < 1e-10);
  }
}

TEST_CASE("normal-ordered monomial products reproduce matrix algebra") {
  const long dim = 24, keep = 12;
  auto [a, ad] = ladder_ops(dim);
  const struct {
    dyson::Mono A, B;
  } cases[] = {{{2, 1}, {1, 2}}, {{0, 3}, {3, 0}}, {{1, 4}, {2, 1}}, {{0, 1}, {4, 0}}};
  for (const auto& c : cases) {
    Mat lhs = (matrix_power(ad, c.A.first) * matrix_power(a, c.A.second)) *
              (matrix_power(ad, c.B.first) * matrix_power(a, c.B.second));
    Mat rhs = Mat::Zero(dim, dim);
    for (const auto& [mono, w] : dyson::normal_product(c.A, c.B)) {
      rhs += w * (matrix_power(ad, mono.first) * matrix_power(a, mono.second));
    }
    REQUIRE((lhs - rhs).block(0, 0, keep, keep).norm() < 1e-11);
  }
}

TEST_CASE("grades 0 and 1 of the interaction solution reproduce the first-order operator") {
  for (long m : {4L, 6L, 8L}) {
    const double t = 2.1;
    OscillatorSpec spec{m, 3e-3, 32};
    const SecondOrderSolution sol = a_interaction_second_order(m, t);
    const Mat first = assemble(sol, t, spec.lambda_prime(), spec.dim, 1);
    const Mat closed = a_first_order(spec, t);
    REQUIRE((first - closed).block(0, 0, 20, 20).norm() < 1e-12);
  }
}

TEST_CASE("second-order solution matches exact diagonalization to O(lambda^3)") {
  const double t = 3.0;
  const long keep = 12;
  for (long m : {4L, 6L}) {
    const double om = to_double(level_spacing_poly(m).eval(Rat(keep)));
    const double lam = 0.1 / (om * t);
    auto resid = [&](double l) {
      OscillatorSpec s{m, l, 48};
      Mat H = hamiltonian(s);
      auto [a, ad] = ladder_ops(s.dim);
      return (heisenberg_exact(H, a, t) - a_second_order(s, t)).block(0, 0, keep, keep).norm();
    };
    const double r1 = resid(lam), r2 = resid(lam / 2.0);
    INFO("m=" << m << " lam=" << lam << " r1=" << r1 << " r2=" << r2);
    REQUIRE(r1 / r2 == Approx(8.0).margin(1.5));
  }
}

TEST_CASE("second-order solution preserves the canonical commutator to O(lambda^3)") {
  const double t = 2.4;
  const long keep = 10;
  const double lam0 = 2e-3;
  auto resid = [&](double l) {
    OscillatorSpec s{4, l, 40};
    Mat A = a_second_order(s, t);
    Mat C = A * A.adjoint() - A.adjoint() * A - Mat::Identity(s.dim, s.dim);
    return C.block(0, 0, keep, keep).norm();
  };
  const double r1 = resid(lam0), r2 = resid(lam0 / 2.0);
  INFO("r1=" << r1 << " r2=" << r2);
  REQUIRE(r1 / r2 == Approx(8.0).margin(1.0));
}

TEST_CASE("corrected quadrature tables equal the runtime derivation") {
  for (double t : {0.4, 1.1, 2.3, 3.6, 5.0}) {
    const SecondOrderSolution sol = a_interaction_second_order(4, t);
    const QuadratureCoeffs lit = quadrature_coeffs_quartic(t);
    const QuadratureCoeffs cor = quadrature_coeffs_quartic(t, QuadratureVariant::corrected);
    const struct {
      long p, q;
      const LambdaSplit QuadratureCoeffs::*field;
    } rows[] = {{0, 1, &QuadratureCoeffs::E1}, {0, 3, &QuadratureCoeffs::E2},
                {2, 1, &QuadratureCoeffs::E3}, {0, 5, &QuadratureCoeffs::E4},
                {1, 4, &QuadratureCoeffs::E5}, {2, 3, &QuadratureCoeffs::E6}};
    for (const auto& r : rows) {
      // grades 0 and 1 are common to both variants and match the derivation
      REQUIRE(std::abs(e_coeff(sol, t, r.p, r.q, 0) - (lit.*(r.field)).c0) < 1e-13);
      REQUIRE(std::abs(e_coeff(sol, t, r.p, r.q, 1) - (lit.*(r.field)).c1) < 1e-13);
      // grade 2 matches the corrected tables
      REQUIRE(std::abs(e_coeff(sol, t, r.p, r.q, 2) - (cor.*(r.field)).c2) < 1e-13);
    }
  }
}

TEST_CASE("true vacuum variance at t = n pi deviates from 1/2 only at O(lambda^3)") {
  const double t = kPi;
  auto dev = [&](double l) { return std::abs(variance_x_exact(4, 0.0, 0.0, l, t, 48) - 0.5); };
  const double r = dev(0.02) / dev(0.01);
  INFO("ratio " << r);
  REQUIRE(r == Approx(8.0).margin(1.5));
  REQUIRE(vacuum_variance_x_quartic(0.02, t, QuadratureVariant::corrected) ==
          Approx(0.5).margin(1e-14));
}
