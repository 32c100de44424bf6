#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <utility>

#include "xxchain/chain_model.hpp"

namespace xxchain {

// Single-excitation coupling matrix <1_k|H|1_j> in units of J: real
// symmetric, zero diagonal, value 2 * strength on every topology edge.
struct Generator {
  Eigen::MatrixXd matrix;
  int dim() const { return static_cast<int>(matrix.rows()); }
};

// Eigendecomposition of a Generator. With tau = J t / hbar the exact
// propagation is c(tau) = V exp(-i diag(lambda) tau) V^T c(0).
struct SpectralPropagator {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // orthonormal columns
  int dim() const { return static_cast<int>(eigenvalues.size()); }
};

// Complex amplitudes over the one-excitation basis, canonical site order.
struct AmplitudeVector {
  Eigen::VectorXcd amplitudes;
  double tau = 0.0;
  double norm_sq() const { return amplitudes.squaredNorm(); }
};

// Initial condition of the transfer protocols. The perturbed state is
//   alpha |01> + sqrt(1 - alpha^2) e^{-i gamma} |10>
// on the sender pair, with alpha = (1 + delta_alpha)/sqrt(2) and
// gamma = 2 pi (1 + delta_gamma); delta_alpha = delta_gamma = 0 recovers
// psi_plus exactly.
struct InitialState {
  enum class Kind { psi_plus, psi_minus, perturbed, single_excitation };

  Kind kind = Kind::psi_plus;
  double delta_alpha = 0.0;
  double delta_gamma = 0.0;

  static InitialState psi_plus() { return {Kind::psi_plus, 0.0, 0.0}; }
  static InitialState psi_minus() { return {Kind::psi_minus, 0.0, 0.0}; }
  static InitialState single_excitation() {
    return {Kind::single_excitation, 0.0, 0.0};
  }
  static InitialState perturbed(double delta_alpha, double delta_gamma) {
    return {Kind::perturbed, delta_alpha, delta_gamma};
  }

  std::string name() const;
};

InitialState initial_state_from_name(const std::string& name,
                                     double delta_alpha = 0.0,
                                     double delta_gamma = 0.0);

Generator build_generator(const ChainSpec& spec);

// LAPACK symmetric eigensolve; throws std::runtime_error if it fails to
// converge (does not happen for symmetric input).
SpectralPropagator diagonalize(const Generator& g);

AmplitudeVector initial_amplitudes(const InitialState& state,
                                   const ChainSpec& spec);

// Advances c0 by tau >= 0; the result carries time c0.tau + tau. Exact and
// norm-preserving.
AmplitudeVector evolve(const SpectralPropagator& p, const AmplitudeVector& c0,
                       double tau);

// Receiver-pair amplitudes (c_n, c_b) as a cheap function of tau: one
// O(dim^2) setup, then O(dim) per sample. Holds scratch buffers, so it is not
// thread-safe; give each worker its own instance.
class ReceiverTrace {
 public:
  ReceiverTrace(const SpectralPropagator& p, const AmplitudeVector& c0,
                const ChainSpec& spec);

  std::pair<std::complex<double>, std::complex<double>> at(double tau);

 private:
  Eigen::ArrayXd lambda_;
  Eigen::ArrayXd a_re_, a_im_, b_re_, b_im_;
  Eigen::ArrayXd cos_, sin_;
};

// Dense 2^n cross-check: builds the full Pauli Hamiltonian, evolves the full
// state vector exactly, and projects back onto the one-excitation basis.
// Throws if the total qubit count exceeds 10 or if any norm leaks out of the
// one-excitation sector.
AmplitudeVector full_space_oracle(const ChainSpec& spec,
                                  const InitialState& state, double tau);

}  // namespace xxchain
