#pragma once

#include <Eigen/Dense>
#include <complex>

#include "xxchain/chain_model.hpp"
#include "xxchain/evolution.hpp"

namespace xxchain {

// State of the receiver pair. The full 4x4 density matrix is X-structured
// and determined entirely by the two site amplitudes, so production paths
// carry only (c_n, c_b); density_matrix() materializes the matrix when the
// general Wootters route is wanted.
struct TwoQubitReducedState {
  std::complex<double> c_n;  // first receiver site (N, or N-1 for standard)
  std::complex<double> c_b;  // second receiver site (B, or N for standard)
};

struct TransmissionRecord {
  double tau = 0.0;
  double concurrence = 0.0;
  double eof = 0.0;
  double fidelity = 0.0;
};

TwoQubitReducedState reduce_to_receiver_pair(const AmplitudeVector& c,
                                             const ChainSpec& spec);

// 4x4 density matrix of the receiver pair in the basis {00, 01, 10, 11}.
Eigen::Matrix4cd density_matrix(const TwoQubitReducedState& state);

// Concurrence of the X-structured reduced state: 2 |c_n c_b|.
double concurrence_x(const TwoQubitReducedState& state);

// Wootters concurrence of an arbitrary two-qubit density matrix: the
// descending square roots of the eigenvalues of
// R = rho (sy x sy) rho* (sy x sy), evaluated in singular-value form for
// accuracy. Rejects matrices that are not Hermitian, trace-one and positive
// semidefinite (eigenvalues below -1e-10); smaller negative eigenvalues are
// clamped to zero.
double wootters_general(const Eigen::Matrix4cd& rho);

// Entanglement of formation as a function of concurrence:
//   EoF = h((1 + sqrt(1 - C^2)) / 2), h = binary entropy, 0 log 0 = 0.
// Accepts c within 1e-12 outside [0, 1] (clamped), rejects anything further.
double eof_from_concurrence(double c);

// Overlap with the psi_plus Bell state: |c_n + c_b|^2 / 2.
double bell_fidelity(const TwoQubitReducedState& state);

// Single-excitation transfer fidelity: population of the last receiver site
// (|c_B|^2, or |c_N|^2 for standard).
double single_site_fidelity(const AmplitudeVector& c, const ChainSpec& spec);

}  // namespace xxchain
