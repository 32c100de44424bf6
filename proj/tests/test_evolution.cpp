#include "doctest.h"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "xxchain/evolution.hpp"

using namespace xxchain;
using std::numbers::pi;

namespace {

const std::complex<double> kI{0.0, 1.0};

ChainSpec branched_uniform(int n, double jm = 1.0) {
  return make_chain(ChainKind::branched, n, {1.0, 1.0, jm, 1.0, 1.0});
}

ChainSpec standard_uniform(int n, double jm = 1.0) {
  return make_chain(ChainKind::standard, n, {1.0, 0.0, jm, 1.0, 0.0});
}

}  // namespace

TEST_CASE("generator of the uniform standard N=4 chain is tridiagonal") {
  const Generator g = build_generator(standard_uniform(4));
  Eigen::MatrixXd expected(4, 4);
  expected << 0, 2, 0, 0,
              2, 0, 2, 0,
              0, 2, 0, 2,
              0, 0, 2, 0;
  CHECK((g.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generator of the branched N=4 chain matches the bordered pattern") {
  const Generator g = build_generator(branched_uniform(4));
  Eigen::MatrixXd expected = Eigen::MatrixXd::Zero(6, 6);
  auto set = [&](int i, int j) { expected(i, j) = expected(j, i) = 2.0; };
  set(0, 2);  // (A,2)
  set(1, 2);  // (1,2)
  set(2, 3);  // (2,3)
  set(3, 4);  // (3,4)
  set(3, 5);  // (3,B)
  CHECK((g.matrix - expected).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("generator is exactly symmetric with zero diagonal") {
  for (const ChainSpec& spec :
       {branched_uniform(7, 2.3), standard_uniform(9, 0.4),
        sample_disorder(branched_uniform(6, 1.7), {0.2, 11, 3}, 1)}) {
    const Generator g = build_generator(spec);
    CHECK(g.matrix == g.matrix.transpose());
    CHECK(g.matrix.diagonal().cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("subspace evolution equals exp(M t) with the bordered matrix") {
  // M = -2i K, where K carries the raw couplings on the edge pattern; the
  // generator stores 2K and the propagator supplies the -i phase.
  const int n = 5;
  const ChainSpec spec = make_chain(ChainKind::branched, n, {1.1, 0.9, 2.0, 0.8, 1.2});
  const Generator g = build_generator(spec);

  Eigen::MatrixXd k_matrix = Eigen::MatrixXd::Zero(n + 2, n + 2);
  auto set = [&](int i, int j, double v) { k_matrix(i, j) = k_matrix(j, i) = v; };
  set(0, 2, 0.9);  // (A,2) branch
  set(1, 2, 1.1);  // (1,2)
  set(2, 3, 2.0);
  set(3, 4, 2.0);
  set(4, 5, 0.8);      // (N-1,N)
  set(4, 6, 1.2);      // (N-1,B) branch
  CHECK((g.matrix - 2.0 * k_matrix).cwiseAbs().maxCoeff() == 0.0);

  const double tau = 1.37;
  const AmplitudeVector c0 = initial_amplitudes(InitialState::psi_plus(), spec);
  const AmplitudeVector via_spectrum = evolve(diagonalize(g), c0, tau);

  const Eigen::MatrixXcd m = -2.0 * kI * k_matrix.cast<std::complex<double>>();
  const Eigen::VectorXcd via_expm = (m * tau).exp() * c0.amplitudes;
  CHECK((via_spectrum.amplitudes - via_expm).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("diagonalize handles closed-form cases") {
  Generator two_site;
  two_site.matrix = Eigen::MatrixXd::Zero(2, 2);
  two_site.matrix(0, 1) = two_site.matrix(1, 0) = 2.0;
  const SpectralPropagator p = diagonalize(two_site);
  CHECK(p.eigenvalues(0) == doctest::Approx(-2.0).epsilon(1e-14));
  CHECK(p.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-14));

  Generator zero;
  zero.matrix = Eigen::MatrixXd::Zero(3, 3);
  const SpectralPropagator pz = diagonalize(zero);
  CHECK(pz.eigenvalues.cwiseAbs().maxCoeff() == 0.0);
  CHECK((pz.eigenvectors - Eigen::MatrixXd::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("uniform chain spectrum is symmetric about zero") {
  const SpectralPropagator p = diagonalize(build_generator(standard_uniform(4)));
  const int d = p.dim();
  for (int i = 0; i < d; ++i) {
    CHECK(p.eigenvalues(i) == doctest::Approx(-p.eigenvalues(d - 1 - i)).epsilon(1e-12));
  }
}

TEST_CASE("spectral decomposition satisfies its reconstruction invariants") {
  for (const ChainSpec& spec :
       {branched_uniform(20, 2.863), standard_uniform(25, 0.7),
        sample_disorder(branched_uniform(15, 4.0), {0.05, 3, 2}, 0)}) {
    const Generator g = build_generator(spec);
    const SpectralPropagator p = diagonalize(g);
    const int d = p.dim();
    CHECK((p.eigenvectors.transpose() * p.eigenvectors -
           Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((p.eigenvectors * p.eigenvalues.asDiagonal() *
               p.eigenvectors.transpose() - g.matrix).cwiseAbs().maxCoeff() < 1e-10);
    for (int i = 0; i + 1 < d; ++i) CHECK(p.eigenvalues(i) <= p.eigenvalues(i + 1));
  }
}

TEST_CASE("initial amplitudes match the protocol definitions") {
  const ChainSpec spec = branched_uniform(4);
  const double inv_sqrt2 = std::sqrt(0.5);

  const AmplitudeVector plus = initial_amplitudes(InitialState::psi_plus(), spec);
  REQUIRE(plus.amplitudes.size() == 6);
  CHECK(plus.amplitudes(0) == std::complex<double>(inv_sqrt2));
  CHECK(plus.amplitudes(1) == std::complex<double>(inv_sqrt2));
  CHECK(plus.amplitudes.tail(4).cwiseAbs().maxCoeff() == 0.0);
  CHECK(plus.tau == 0.0);

  const AmplitudeVector minus = initial_amplitudes(InitialState::psi_minus(), spec);
  CHECK(minus.amplitudes(0) == std::complex<double>(inv_sqrt2));
  CHECK(minus.amplitudes(1) == std::complex<double>(-inv_sqrt2));

  const AmplitudeVector unperturbed =
      initial_amplitudes(InitialState::perturbed(0.0, 0.0), spec);
  CHECK(unperturbed.amplitudes == plus.amplitudes);

  const ChainSpec line = standard_uniform(4);
  const AmplitudeVector one =
      initial_amplitudes(InitialState::single_excitation(), line);
  CHECK(one.amplitudes(0) == std::complex<double>(1.0));
  CHECK(one.amplitudes.tail(3).cwiseAbs().maxCoeff() == 0.0);

  CHECK_THROWS_AS(
      initial_amplitudes(InitialState::perturbed(0.5, 0.0), spec),
      std::invalid_argument);
}

TEST_CASE("perturbed state is normalized and carries the phase") {
  const ChainSpec spec = branched_uniform(6);
  const AmplitudeVector c =
      initial_amplitudes(InitialState::perturbed(0.08, -0.03), spec);
  CHECK(c.norm_sq() == doctest::Approx(1.0).epsilon(1e-14));
  const double alpha = (1.0 + 0.08) * std::sqrt(0.5);
  CHECK(std::abs(c.amplitudes(1) - alpha) < 1e-15);
  CHECK(std::abs(std::abs(c.amplitudes(0)) - std::sqrt(1 - alpha * alpha)) < 1e-15);
  CHECK(std::arg(c.amplitudes(0)) == doctest::Approx(2 * pi * 0.03).epsilon(1e-12));
}

TEST_CASE("two-site transfer has the closed form (cos 2t, -i sin 2t)") {
  Generator g;
  g.matrix = Eigen::MatrixXd::Zero(2, 2);
  g.matrix(0, 1) = g.matrix(1, 0) = 2.0;
  const SpectralPropagator p = diagonalize(g);

  AmplitudeVector c0;
  c0.amplitudes = Eigen::VectorXcd::Zero(2);
  c0.amplitudes(0) = 1.0;

  const AmplitudeVector quarter = evolve(p, c0, pi / 4);
  CHECK(std::abs(quarter.amplitudes(0)) < 1e-12);
  CHECK(std::abs(quarter.amplitudes(1) - (-kI)) < 1e-12);

  const double tau = 0.3;
  const AmplitudeVector c = evolve(p, c0, tau);
  CHECK(std::abs(c.amplitudes(0) - std::cos(2 * tau)) < 1e-12);
  CHECK(std::abs(c.amplitudes(1) - (-kI * std::sin(2 * tau))) < 1e-12);
}

TEST_CASE("evolution preserves the norm and composes over time") {
  const ChainSpec spec = branched_uniform(12, 2.5);
  const SpectralPropagator p = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(InitialState::psi_plus(), spec);

  const AmplitudeVector unchanged = evolve(p, c0, 0.0);
  CHECK((unchanged.amplitudes - c0.amplitudes).cwiseAbs().maxCoeff() < 1e-15);

  for (double tau : {0.5, 3.7, 42.0, 250.0}) {
    CHECK(std::abs(evolve(p, c0, tau).norm_sq() - 1.0) < 1e-10);
  }

  // group property
  const AmplitudeVector two_steps = evolve(p, evolve(p, c0, 1.9), 2.3);
  const AmplitudeVector one_step = evolve(p, c0, 1.9 + 2.3);
  CHECK((two_steps.amplitudes - one_step.amplitudes).cwiseAbs().maxCoeff() < 1e-10);
  CHECK(two_steps.tau == doctest::Approx(one_step.tau));

  AmplitudeVector wrong_dim;
  wrong_dim.amplitudes = Eigen::VectorXcd::Zero(5);
  CHECK_THROWS_AS(evolve(p, wrong_dim, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(p, c0, -1.0), std::invalid_argument);
}

TEST_CASE("psi_minus is stationary on the symmetric branched chain") {
  const ChainSpec spec = branched_uniform(8, 3.2);
  const SpectralPropagator p = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(InitialState::psi_minus(), spec);
  const Eigen::VectorXd populations0 = c0.amplitudes.cwiseAbs2();
  double drift = 0.0;
  for (double tau = 0.0; tau <= 100.0; tau += 2.5) {
    const Eigen::VectorXd populations = evolve(p, c0, tau).amplitudes.cwiseAbs2();
    drift = std::max(drift, (populations - populations0).cwiseAbs().maxCoeff());
  }
  CHECK(drift < 1e-10);
}

TEST_CASE("mirror symmetry keeps the receiver amplitudes equal") {
  const ChainSpec spec = branched_uniform(10, 2.3);
  const SpectralPropagator p = diagonalize(build_generator(spec));
  const AmplitudeVector c0 = initial_amplitudes(InitialState::psi_plus(), spec);
  const auto [site_n, site_b] = receiver_sites(spec);
  for (double tau = 0.0; tau <= 50.0; tau += 0.7) {
    const AmplitudeVector c = evolve(p, c0, tau);
    CHECK(std::abs(c.amplitudes(site_n) - c.amplitudes(site_b)) < 1e-10);
  }
}

TEST_CASE("ReceiverTrace agrees with full evolution") {
  const ChainSpec spec = branched_uniform(9, 1.8);
  const SpectralPropagator p = diagonalize(build_generator(spec));
  const AmplitudeVector c0 =
      initial_amplitudes(InitialState::perturbed(0.05, 0.02), spec);
  ReceiverTrace trace(p, c0, spec);
  const auto [site_n, site_b] = receiver_sites(spec);
  for (double tau : {0.0, 0.9, 7.7, 31.4}) {
    const auto [c_n, c_b] = trace.at(tau);
    const AmplitudeVector c = evolve(p, c0, tau);
    CHECK(std::abs(c_n - c.amplitudes(site_n)) < 1e-12);
    CHECK(std::abs(c_b - c.amplitudes(site_b)) < 1e-12);
  }
}

TEST_CASE("subspace evolution matches the full-space oracle") {
  for (int n : {4, 5}) {
    for (const bool branched : {true, false}) {
      const ChainSpec spec = branched ? branched_uniform(n) : standard_uniform(n);
      const SpectralPropagator p = diagonalize(build_generator(spec));
      for (const InitialState& state :
           {InitialState::psi_plus(), InitialState::single_excitation()}) {
        const AmplitudeVector c0 = initial_amplitudes(state, spec);
        double max_dev = 0.0;
        for (int k = 1; k <= 20; ++k) {
          const double tau = 20.0 * k / 20.0;
          const AmplitudeVector fast = evolve(p, c0, tau);
          const AmplitudeVector oracle = full_space_oracle(spec, state, tau);
          max_dev = std::max(
              max_dev, (fast.amplitudes - oracle.amplitudes).cwiseAbs().maxCoeff());
        }
        CHECK(max_dev < 1e-8);
      }
    }
  }
}

TEST_CASE("full-space oracle edge cases") {
  const ChainSpec spec = branched_uniform(4);
  const AmplitudeVector at_zero =
      full_space_oracle(spec, InitialState::psi_plus(), 0.0);
  const AmplitudeVector c0 = initial_amplitudes(InitialState::psi_plus(), spec);
  CHECK((at_zero.amplitudes - c0.amplitudes).cwiseAbs().maxCoeff() < 1e-14);

  // 11 qubits exceeds the dense cap
  CHECK_THROWS_AS(full_space_oracle(branched_uniform(9), InitialState::psi_plus(), 1.0),
                  std::invalid_argument);
}
