#include <doctest.h>

#include <random>

#include "decobound/discrete.hpp"
#include "decobound/kernels.hpp"
#include "decobound/oracle.hpp"
#include "oracles.hpp"

using namespace decobound;
using ops::Site;

namespace {

bath::DiscreteBath warm_mode() {
  return bath::DiscreteBath::single_mode(1.3, 0.8, 0.6, InverseTemperature{2.0});
}

QubitParams default_qubits() { return {1.0, 0.1}; }

}  // namespace

TEST_SUITE_BEGIN("discrete");

TEST_CASE("jump index table") {
  CHECK(discrete::jump_index(Site::A, Sign::plus) == 0);
  CHECK(discrete::jump_index(Site::B, Sign::plus) == 1);
  CHECK(discrete::jump_index(Site::A, Sign::minus) == 2);
  CHECK(discrete::jump_index(Site::B, Sign::minus) == 3);
  CHECK((discrete::jump_operator(0) - ops::sigma(Sign::plus, Site::A)).norm() < 1e-15);
  CHECK((discrete::jump_operator(3) - ops::sigma(Sign::minus, Site::B)).norm() < 1e-15);
  CHECK_THROWS_AS(discrete::jump_operator(4), std::invalid_argument);
}

TEST_CASE("second-order update is traceless and hermitian") {
  std::mt19937_64 rng(31);
  const auto b = warm_mode();
  const auto qp = default_qubits();
  for (double t : {0.4, 2.0, 9.0}) {
    const Eigen::Matrix4cd rho0 = testoracle::random_density(rng);
    const Eigen::Matrix4cd d = discrete::delta_rho2_discrete(b, qp, rho0, t);
    CHECK(std::abs(d.trace()) < 1e-13);
    CHECK(ops::is_hermitian(d, 1e-13));
  }
  const Eigen::Matrix4cd at_zero = discrete::delta_rho2_discrete(
      b, qp, testoracle::random_density(rng), 0.0);
  CHECK(at_zero.cwiseAbs().maxCoeff() < 1e-15);
  CHECK_THROWS_AS(discrete::delta_rho2_discrete(
                      b, qp, Eigen::Matrix4cd::Identity() / 4.0, -1.0),
                  std::domain_error);
}

TEST_CASE("closed form matches direct time quadrature") {
  std::mt19937_64 rng(32);
  const auto qp = default_qubits();
  std::vector<bath::DiscreteBath> baths = {
      warm_mode(),
      bath::DiscreteBath::single_mode(2.4, 0.5, -0.4, InverseTemperature{1.0}),
      bath::DiscreteBath::single_mode(0.7, 1.1, 1.0, InverseTemperature::infinite())};
  for (const auto& b : baths) {
    const Eigen::Matrix4cd rho0 = testoracle::random_density(rng);
    const double t = 3.0;
    const auto corr = [&](double tau) { return bath::correlation_function(b, tau); };
    const Eigen::Matrix4cd direct = oracle::perturbative_direct(corr, qp, rho0, t);
    const Eigen::Matrix4cd closed = discrete::delta_rho2_discrete(b, qp, rho0, t);
    CHECK((direct - closed).cwiseAbs().maxCoeff() < 5e-9);
  }
}

TEST_CASE("snapshot recomposes the full update exactly") {
  std::mt19937_64 rng(33);
  const auto b = warm_mode();
  const auto qp = default_qubits();
  for (double t : {0.3, 1.7, 6.5}) {
    const Eigen::Matrix4cd rho0 = testoracle::random_density(rng);
    const auto snap = discrete::snapshot(b, qp, t);
    CHECK(ops::is_hermitian(snap.h_eff_t, 1e-12));
    CHECK(ops::is_hermitian(snap.dissipator, 1e-12));
    const Eigen::Matrix4cd recomposed = snap.apply(rho0);
    const Eigen::Matrix4cd full = discrete::delta_rho2_discrete(b, qp, rho0, t);
    CHECK((recomposed - full).cwiseAbs().maxCoeff() <
          1e-12 * std::max(1.0, full.cwiseAbs().maxCoeff()));
  }
  CHECK_THROWS_AS(discrete::snapshot(b, qp, 0.0), std::domain_error);
}

TEST_CASE("snapshot hamiltonian reaches the dispersion formula at long times") {
  // Single zero-temperature line: P_ab = l^2 W_ab / (2 pi (w0 - Omega)),
  // M_ab = -l^2 W_ab / (2 pi (Omega + w0)); flip-flop element p + m.
  const double Omega = 3.0, amp = 0.8, corr = 0.6;
  const auto b =
      bath::DiscreteBath::single_mode(Omega, amp, corr, InverseTemperature::infinite());
  const auto qp = default_qubits();
  const double l2 = qp.lambda * qp.lambda;
  const double w_ab = amp * corr;
  const double expect = l2 * w_ab / (2.0 * pi) *
                        (1.0 / (qp.omega0 - Omega) - 1.0 / (Omega + qp.omega0));
  const auto snap = discrete::snapshot(b, qp, 2000.0);
  CHECK(std::abs(snap.h_eff_t(2, 1).real() - expect) < 2e-3 * std::abs(expect));
  CHECK(std::abs(snap.h_eff_t(2, 1).imag()) < 1e-3 * std::abs(expect));
}

TEST_CASE("dissipator vanishes at commensurate gate-zero times") {
  // Omega = 3, omega0 = 1: all four detunings are multiples of 2, so every
  // elementary factor vanishes at t_k = pi k.
  const auto b =
      bath::DiscreteBath::single_mode(3.0, 0.5, 1.0, InverseTemperature{2.0});
  const auto qp = default_qubits();
  const auto zeros = kernels::gate_zero_times(3.0, qp.omega0, Sign::plus, 3);
  for (size_t k = 0; k < zeros.size(); ++k) {
    const double t = zeros[k];
    CHECK(t == doctest::Approx(pi * (k + 1)));
    const double r = discrete::residual_decoherence(b, qp, t);
    CHECK(r < 1e-15 * qp.lambda * qp.lambda * 0.5 * t * t);
  }
  // between zeros the residual is finite
  CHECK(discrete::residual_decoherence(b, qp, 0.5 * pi) > 1e-6);
}

TEST_CASE("off-resonance scan fits the sinc envelope") {
  const auto b = warm_mode();  // detuning 0.3 from omega0 = 1
  const auto qp = default_qubits();
  std::vector<double> grid;
  for (int i = 0; i <= 60; ++i) grid.push_back(25.0 * i / 60.0);
  const auto scan = discrete::off_resonance_scan(b, qp, grid);
  CHECK(scan.delta_omega == doctest::Approx(0.3));
  CHECK(scan.envelope_error < 0.05);
  CHECK(scan.envelope_coefficient > 0.0);

  const auto resonant =
      bath::DiscreteBath::single_mode(1.0, 0.5, 1.0, InverseTemperature{2.0});
  CHECK_THROWS_AS(discrete::off_resonance_scan(resonant, qp, grid), std::domain_error);
}

TEST_SUITE_END();
