#include "xxchain/evolution.hpp"

#include <lapacke.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xxchain {

namespace {

const double kInvSqrt2 = std::sqrt(0.5);
constexpr std::complex<double> kImag{0.0, 1.0};

}  // namespace

std::string InitialState::name() const {
  switch (kind) {
    case Kind::psi_plus: return "psi_plus";
    case Kind::psi_minus: return "psi_minus";
    case Kind::perturbed: return "perturbed";
    case Kind::single_excitation: return "single_excitation";
  }
  return "unknown";
}

InitialState initial_state_from_name(const std::string& name,
                                     double delta_alpha, double delta_gamma) {
  if (name == "psi_plus") return InitialState::psi_plus();
  if (name == "psi_minus") return InitialState::psi_minus();
  if (name == "single_excitation") return InitialState::single_excitation();
  if (name == "perturbed") return InitialState::perturbed(delta_alpha, delta_gamma);
  throw std::invalid_argument("unknown initial state '" + name + "'");
}

Generator build_generator(const ChainSpec& spec) {
  const int d = spec.site_count();
  Generator g;
  g.matrix = Eigen::MatrixXd::Zero(d, d);
  for (const Edge& e : edge_list(spec)) {
    g.matrix(e.a, e.b) += 2.0 * e.strength;
    g.matrix(e.b, e.a) += 2.0 * e.strength;
  }
  return g;
}

SpectralPropagator diagonalize(const Generator& g) {
  const int d = g.dim();
  if (g.matrix != g.matrix.transpose()) {
    throw std::invalid_argument("generator matrix must be symmetric");
  }
  SpectralPropagator p;
  p.eigenvectors = g.matrix;  // overwritten with eigenvectors
  p.eigenvalues.resize(d);
  lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', d,
                                   p.eigenvectors.data(), d,
                                   p.eigenvalues.data());
  if (info != 0) {
    throw std::runtime_error("symmetric eigensolver failed to converge (info=" +
                             std::to_string(info) + ")");
  }
  return p;
}

AmplitudeVector initial_amplitudes(const InitialState& state,
                                   const ChainSpec& spec) {
  const auto [first, second] = sender_sites(spec);
  AmplitudeVector c;
  c.amplitudes = Eigen::VectorXcd::Zero(spec.site_count());
  c.tau = 0.0;

  switch (state.kind) {
    case InitialState::Kind::psi_plus:
      c.amplitudes(first) = kInvSqrt2;
      c.amplitudes(second) = kInvSqrt2;
      break;
    case InitialState::Kind::psi_minus:
      c.amplitudes(first) = kInvSqrt2;
      c.amplitudes(second) = -kInvSqrt2;
      break;
    case InitialState::Kind::single_excitation:
      c.amplitudes(first) = 1.0;
      break;
    case InitialState::Kind::perturbed: {
      if (state.delta_alpha == 0.0 && state.delta_gamma == 0.0) {
        // Exact reduction to psi_plus.
        c.amplitudes(first) = kInvSqrt2;
        c.amplitudes(second) = kInvSqrt2;
        break;
      }
      const double alpha = (1.0 + state.delta_alpha) * kInvSqrt2;
      if (std::abs(alpha) > 1.0) {
        throw std::invalid_argument(
            "perturbed amplitude (1 + delta_alpha)/sqrt(2) exceeds 1");
      }
      // gamma = 2 pi (1 + delta_gamma); the whole turn drops out of the phase.
      const double gamma = 2.0 * std::numbers::pi * state.delta_gamma;
      c.amplitudes(second) = alpha;
      c.amplitudes(first) =
          std::sqrt(1.0 - alpha * alpha) * std::exp(-kImag * gamma);
      break;
    }
  }
  return c;
}

AmplitudeVector evolve(const SpectralPropagator& p, const AmplitudeVector& c0,
                       double tau) {
  if (p.dim() != c0.amplitudes.size()) {
    throw std::invalid_argument("propagator and amplitude dimensions differ");
  }
  if (tau < 0.0) {
    throw std::invalid_argument("evolution time must be nonnegative");
  }
  Eigen::VectorXcd weights = p.eigenvectors.transpose() * c0.amplitudes;
  Eigen::ArrayXd phase = p.eigenvalues.array() * (-tau);
  weights.array() *=
      phase.cos().cast<std::complex<double>>() +
      kImag * phase.sin().cast<std::complex<double>>();
  AmplitudeVector out;
  out.amplitudes = p.eigenvectors * weights;
  out.tau = c0.tau + tau;
  return out;
}

ReceiverTrace::ReceiverTrace(const SpectralPropagator& p,
                             const AmplitudeVector& c0, const ChainSpec& spec) {
  if (p.dim() != c0.amplitudes.size() || p.dim() != spec.site_count()) {
    throw std::invalid_argument("propagator, state and chain dimensions differ");
  }
  const auto [site_n, site_b] = receiver_sites(spec);
  const Eigen::VectorXcd weights = p.eigenvectors.transpose() * c0.amplitudes;
  const Eigen::ArrayXcd a =
      p.eigenvectors.row(site_n).transpose().array() * weights.array();
  const Eigen::ArrayXcd b =
      p.eigenvectors.row(site_b).transpose().array() * weights.array();
  lambda_ = p.eigenvalues.array();
  a_re_ = a.real();
  a_im_ = a.imag();
  b_re_ = b.real();
  b_im_ = b.imag();
  cos_.resize(lambda_.size());
  sin_.resize(lambda_.size());
}

std::pair<std::complex<double>, std::complex<double>> ReceiverTrace::at(
    double tau) {
  // c(tau) = sum_m a_m e^{-i lambda_m tau}, split into real arithmetic.
  cos_ = (lambda_ * (-tau)).cos();
  sin_ = (lambda_ * (-tau)).sin();
  std::complex<double> c_n{(a_re_ * cos_ - a_im_ * sin_).sum(),
                           (a_re_ * sin_ + a_im_ * cos_).sum()};
  std::complex<double> c_b{(b_re_ * cos_ - b_im_ * sin_).sum(),
                           (b_re_ * sin_ + b_im_ * cos_).sum()};
  return {c_n, c_b};
}

AmplitudeVector full_space_oracle(const ChainSpec& spec,
                                  const InitialState& state, double tau) {
  const int n = spec.site_count();
  if (n > 10) {
    throw std::invalid_argument(
        "full-space oracle is capped at 10 qubits, got " + std::to_string(n));
  }
  if (tau < 0.0) {
    throw std::invalid_argument("evolution time must be nonnegative");
  }
  const int dim = 1 << n;

  // sx sx + sy sy maps |01> -> 2|10> (and back) and annihilates |00>, |11>,
  // so the full Hamiltonian is real in the computational basis. Qubit k
  // occupies bit k of the basis index.
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (const Edge& e : edge_list(spec)) {
    const int mask = (1 << e.a) | (1 << e.b);
    for (int basis = 0; basis < dim; ++basis) {
      const bool bit_a = (basis >> e.a) & 1;
      const bool bit_b = (basis >> e.b) & 1;
      if (bit_a != bit_b) h(basis ^ mask, basis) += 2.0 * e.strength;
    }
  }

  Eigen::VectorXcd psi0 = Eigen::VectorXcd::Zero(dim);
  const AmplitudeVector c0 = initial_amplitudes(state, spec);
  for (int k = 0; k < n; ++k) psi0(1 << k) = c0.amplitudes(k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("full-space eigensolver failed");
  }
  Eigen::VectorXcd weights = solver.eigenvectors().transpose() * psi0;
  Eigen::ArrayXd phase = solver.eigenvalues().array() * (-tau);
  weights.array() *= phase.cos().cast<std::complex<double>>() +
                     kImag * phase.sin().cast<std::complex<double>>();
  const Eigen::VectorXcd psi = solver.eigenvectors() * weights;

  AmplitudeVector out;
  out.amplitudes.resize(n);
  out.tau = tau;
  for (int k = 0; k < n; ++k) out.amplitudes(k) = psi(1 << k);

  const double leaked = psi.squaredNorm() - out.norm_sq();
  if (std::abs(leaked) > 1e-12) {
    throw std::runtime_error(
        "norm leaked out of the one-excitation sector: " +
        std::to_string(leaked));
  }
  return out;
}

}  // namespace xxchain
