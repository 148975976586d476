#pragma once

// Truncated Fock-space tooling: ladder operators, quadratures, the
// anharmonic-oscillator Hamiltonian H0 + lambda' (a^dag + a)^m, exact
// Heisenberg-picture evolution by eigendecomposition, coherent states with
// controlled Poisson tails, and expectation/variance helpers.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

namespace aho {

using Mat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// Defining parameters of the oscillator H = a^dag a + 1/2 + lambda' (a^dag+a)^m,
// lambda' = lambda / (m 2^{m/2}); even m >= 4 throughout.
struct OscillatorSpec {
  long m = 4;
  double lambda = 0.0;
  long dim = 32;

  OscillatorSpec(long m_, double lambda_, long dim_) : m(m_), lambda(lambda_), dim(dim_) {
    validate();
  }
  void validate() const {
    if (m < 4 || m % 2 != 0) throw std::invalid_argument("OscillatorSpec: m must be even and >= 4");
    if (lambda < 0) throw std::invalid_argument("OscillatorSpec: lambda must be >= 0");
    if (dim < m + 4) throw std::invalid_argument("OscillatorSpec: dim must be >= m + 4");
  }
  double lambda_prime() const { return lambda / (static_cast<double>(m) * std::pow(2.0, m / 2.0)); }
};

inline long default_dim(long m, double alpha_mag) {
  long by_state = 4 * static_cast<long>(std::ceil(alpha_mag * alpha_mag)) + 20;
  long by_op = m + 16;
  return std::max(by_state, by_op);
}

inline std::pair<Mat, Mat> ladder_ops(long dim) {
  if (dim < 2) throw std::invalid_argument("ladder_ops: dim must be >= 2");
  Mat a = Mat::Zero(dim, dim);
  for (long n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  return {a, a.adjoint()};
}

inline Mat number_op(long dim) {
  Mat n = Mat::Zero(dim, dim);
  for (long k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
  return n;
}

inline Mat h0_op(long dim) {
  Mat h = Mat::Zero(dim, dim);
  for (long k = 0; k < dim; ++k) h(k, k) = k + 0.5;
  return h;
}

// X = (a^dag + a)/sqrt(2), Xdot = i(a^dag - a)/sqrt(2); [X, Xdot] = i on the interior.
inline Mat x_op(long dim) {
  auto [a, ad] = ladder_ops(dim);
  return (ad + a) / std::sqrt(2.0);
}

inline Mat xdot_op(long dim) {
  auto [a, ad] = ladder_ops(dim);
  return cplx(0.0, 1.0) * (ad - a) / std::sqrt(2.0);
}

inline Mat matrix_power(const Mat& A, long p) {
  Mat r = Mat::Identity(A.rows(), A.cols());
  for (long i = 0; i < p; ++i) r = r * A;
  return r;
}

inline Mat hamiltonian(const OscillatorSpec& spec) {
  spec.validate();
  auto [a, ad] = ladder_ops(spec.dim);
  Mat q = ad + a;
  return h0_op(spec.dim) + spec.lambda_prime() * matrix_power(q, spec.m);
}

// Truncated state with a record of the probability mass dropped by truncation.
struct FockState {
  CVec amp;
  double tail_mass = 0.0;
  long dim() const { return amp.size(); }
};

struct TruncationError : std::runtime_error {
  long required_dim;
  TruncationError(const std::string& msg, long req) : std::runtime_error(msg), required_dim(req) {}
};

// Coherent state |alpha| e^{i theta}: amp_n ~ e^{-N0/2} alpha^n / sqrt(n!),
// renormalized after truncation.  Errors out if the Poisson tail beyond the
// truncation exceeds tail_bound, reporting the dimension that would suffice.
inline FockState coherent_state(double alpha_mag, double theta, long dim, double tail_bound = 1e-12) {
  if (alpha_mag < 0) throw std::invalid_argument("coherent_state: alpha_mag must be >= 0");
  if (dim < 1) throw std::invalid_argument("coherent_state: dim must be >= 1");
  const double n0 = alpha_mag * alpha_mag;
  // Poisson weights by recurrence; find mass inside the truncation.
  double w = std::exp(-n0);
  double inside = 0.0;
  std::vector<double> weights(dim);
  for (long n = 0; n < dim; ++n) {
    weights[n] = w;
    inside += w;
    w *= n0 / static_cast<double>(n + 1);
  }
  double tail = 1.0 - inside;
  if (tail > tail_bound) {
    long req = dim;
    double ww = w, extra = 0.0;
    while (tail - extra > tail_bound && req < 100000) {
      extra += ww;
      ww *= n0 / static_cast<double>(req + 1);
      ++req;
    }
    throw TruncationError("coherent_state: Poisson tail exceeds bound", req + 1);
  }
  FockState st;
  st.amp = CVec::Zero(dim);
  for (long n = 0; n < dim; ++n)
    st.amp(n) = std::sqrt(weights[n]) * std::exp(cplx(0.0, theta * static_cast<double>(n)));
  st.amp /= std::sqrt(inside);
  st.tail_mass = std::max(tail, 0.0);
  return st;
}

// e^{iHt} O e^{-iHt} by spectral decomposition of Hermitian H.
inline Mat heisenberg_exact(const Mat& H, const Mat& O, double t) {
  const double herm_resid = (H - Mat(H.adjoint())).cwiseAbs().maxCoeff();
  if (herm_resid > 1e-9 * (1.0 + H.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("heisenberg_exact: H is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Mat> es(H);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("heisenberg_exact: eigendecomposition failed (matrix dim " +
                             std::to_string(H.rows()) + ")");
  const Mat& V = es.eigenvectors();
  const Eigen::VectorXd& E = es.eigenvalues();
  Mat W = V.adjoint() * O * V;
  for (long k = 0; k < W.rows(); ++k)
    for (long l = 0; l < W.cols(); ++l)
      W(k, l) *= std::exp(cplx(0.0, (E(k) - E(l)) * t));
  return V * W * V.adjoint();
}

inline cplx expectation(const Mat& O, const FockState& psi) {
  if (O.rows() != psi.dim()) throw std::invalid_argument("expectation: dimension mismatch");
  return (psi.amp.adjoint() * (O * psi.amp))(0, 0);
}

inline double variance(const Mat& O, const FockState& psi) {
  if (O.rows() != psi.dim()) throw std::invalid_argument("variance: dimension mismatch");
  const double herm_resid = (O - Mat(O.adjoint())).cwiseAbs().maxCoeff();
  if (herm_resid > 1e-10 * (1.0 + O.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("variance: operator is not Hermitian");
  const double mean = expectation(O, psi).real();
  const double second = expectation(O * O, psi).real();
  return second - mean * mean;
}

} // namespace aho
