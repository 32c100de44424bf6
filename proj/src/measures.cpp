#include "xxchain/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace xxchain {

namespace {

double binary_entropy(double f) {
  if (f <= 0.0 || f >= 1.0) return 0.0;  // 0 log 0 = 0
  return -f * std::log2(f) - (1.0 - f) * std::log2(1.0 - f);
}

}  // namespace

TwoQubitReducedState reduce_to_receiver_pair(const AmplitudeVector& c,
                                             const ChainSpec& spec) {
  const auto [site_n, site_b] = receiver_sites(spec);
  return {c.amplitudes(site_n), c.amplitudes(site_b)};
}

Eigen::Matrix4cd density_matrix(const TwoQubitReducedState& state) {
  const double pop_n = std::norm(state.c_n);
  const double pop_b = std::norm(state.c_b);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  rho(0, 0) = 1.0 - pop_n - pop_b;
  rho(1, 1) = pop_b;
  rho(2, 2) = pop_n;
  rho(1, 2) = state.c_b * std::conj(state.c_n);
  rho(2, 1) = state.c_n * std::conj(state.c_b);
  return rho;
}

double concurrence_x(const TwoQubitReducedState& state) {
  return 2.0 * std::abs(state.c_n * state.c_b);
}

double wootters_general(const Eigen::Matrix4cd& rho) {
  if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > 1e-8) {
    throw std::invalid_argument("density matrix must be Hermitian");
  }
  if (std::abs(rho.trace().real() - 1.0) > 1e-8 ||
      std::abs(rho.trace().imag()) > 1e-8) {
    throw std::invalid_argument("density matrix must have unit trace");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> rho_eigen(rho);
  const Eigen::Vector4d d = rho_eigen.eigenvalues();
  if (d.minCoeff() < -1e-10) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }

  Eigen::Matrix4cd spin_flip = Eigen::Matrix4cd::Zero();  // sy x sy
  spin_flip(0, 3) = -1.0;
  spin_flip(1, 2) = 1.0;
  spin_flip(2, 1) = 1.0;
  spin_flip(3, 0) = -1.0;

  // The lambda_i are the descending square roots of the eigenvalues of
  // R = rho (sy x sy) rho* (sy x sy), which equal the singular values of
  // W = sqrt(rho) (sy x sy) conj(sqrt(rho)). The singular-value form stays
  // accurate at the zero eigenvalues of R, where the direct square roots
  // pick up sqrt(eps) noise. Eigenvalues of rho at machine-noise level are
  // treated as exact zeros.
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * d.maxCoeff();
  Eigen::Vector4d sqrt_d;
  for (int i = 0; i < 4; ++i) sqrt_d(i) = d(i) > floor ? std::sqrt(d(i)) : 0.0;
  const Eigen::Matrix4cd sqrt_rho = rho_eigen.eigenvectors() *
                                    sqrt_d.asDiagonal() *
                                    rho_eigen.eigenvectors().adjoint();
  const Eigen::Matrix4cd w = sqrt_rho * spin_flip * sqrt_rho.conjugate();
  Eigen::JacobiSVD<Eigen::Matrix4cd> svd(w);
  const Eigen::Vector4d lambda = svd.singularValues();  // descending
  const double c = lambda(0) - lambda(1) - lambda(2) - lambda(3);
  return std::clamp(c, 0.0, 1.0);
}

double eof_from_concurrence(double c) {
  if (c < -1e-12 || c > 1.0 + 1e-12) {
    throw std::invalid_argument("concurrence " + std::to_string(c) +
                                " outside [0, 1]");
  }
  c = std::clamp(c, 0.0, 1.0);
  const double f = 0.5 * (1.0 + std::sqrt(1.0 - c * c));
  return std::clamp(binary_entropy(f), 0.0, 1.0);
}

double bell_fidelity(const TwoQubitReducedState& state) {
  return 0.5 * std::norm(state.c_n + state.c_b);
}

double single_site_fidelity(const AmplitudeVector& c, const ChainSpec& spec) {
  return std::norm(c.amplitudes(receiver_sites(spec).second));
}

}  // namespace xxchain
