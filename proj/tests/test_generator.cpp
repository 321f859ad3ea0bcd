#include <doctest.h>

#include "decobound/generator.hpp"
#include "decobound/ops.hpp"
#include "oracles.hpp"

using namespace decobound;
using ops::Site;

namespace {

bath::OhmicBath default_ohmic() {
  bath::OhmicBath b;
  b.alpha = 0.05;
  b.omega_c = 5.0;
  b.kappa = 1.0;
  b.beta = InverseTemperature{2.0};
  return b;
}

QubitParams default_qubits() { return {1.0, 0.1}; }

// Dissipator superoperator assembled directly from a rate matrix, bypassing
// the Lindblad eigendecomposition.
ops::Matrix16cd dissipator_super(const Eigen::Matrix2cd& gamma, Sign s) {
  ops::Matrix16cd d = ops::Matrix16cd::Zero();
  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const Eigen::Matrix4cd jb = ops::sigma(s, ops::sites[b]);
      const Eigen::Matrix4cd ja_dag = ops::sigma(s, ops::sites[a]).adjoint();
      d += gamma(a, b) * (ops::kron16(ja_dag.transpose(), jb) -
                          0.5 * ops::kron16(id, ja_dag * jb) -
                          0.5 * ops::kron16((ja_dag * jb).transpose(), id));
    }
  return d;
}

}  // namespace

TEST_SUITE_BEGIN("generator");

TEST_CASE("rate matrices are the spectrum at the qubit frequencies") {
  const auto b = default_ohmic();
  const auto qp = default_qubits();
  const auto gen = generator::build_generator(b, qp);
  const double l2 = qp.lambda * qp.lambda;
  CHECK((gen.rates.gamma_plus - l2 * bath::eval_spectrum(b, qp.omega0))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
  CHECK((gen.rates.gamma_minus - l2 * bath::eval_spectrum(b, -qp.omega0))
            .cwiseAbs()
            .maxCoeff() < 1e-15);
}

TEST_CASE("lindblad set reproduces the rate-matrix dissipator") {
  const auto b = default_ohmic();
  const auto qp = default_qubits();
  auto [rates, lindblads] = generator::lindblad_decomposition(b, qp);

  generator::EffectiveGenerator gen;
  gen.h_eff.setZero();
  gen.lindblads = lindblads;
  gen.rates = rates;
  const ops::Matrix16cd from_lindblads = generator::assemble_liouvillian(gen);
  const ops::Matrix16cd direct = dissipator_super(rates.gamma_plus, Sign::plus) +
                                 dissipator_super(rates.gamma_minus, Sign::minus);
  CHECK((from_lindblads - direct).cwiseAbs().maxCoeff() < 1e-14);
}

TEST_CASE("identical environments give collective jump operators only") {
  const auto b = default_ohmic();  // kappa = 1: rank-1 rate matrices
  const auto qp = default_qubits();
  auto [rates, lindblads] = generator::lindblad_decomposition(b, qp);
  REQUIRE(lindblads.size() == 2);  // one per sign channel
  for (const auto& l : lindblads) {
    // proportional to (sigma_s^A + sigma_s^B)/sqrt(2)
    const Eigen::Matrix4cd sym_plus =
        (ops::sigma(Sign::plus, Site::A) + ops::sigma(Sign::plus, Site::B)) /
        std::sqrt(2.0);
    const Eigen::Matrix4cd sym_minus =
        (ops::sigma(Sign::minus, Site::A) + ops::sigma(Sign::minus, Site::B)) /
        std::sqrt(2.0);
    const double overlap_plus = std::abs((sym_plus.adjoint() * l).trace());
    const double overlap_minus = std::abs((sym_minus.adjoint() * l).trace());
    // Cauchy-Schwarz saturated iff l is proportional to the collective operator
    CHECK(std::max(overlap_plus, overlap_minus) ==
          doctest::Approx(l.norm() * std::sqrt(2.0)).epsilon(1e-10));
  }
}

TEST_CASE("effective hamiltonian is hermitian with flip-flop structure") {
  const auto b = default_ohmic();
  const auto qp = default_qubits();
  const Eigen::Matrix4cd h = generator::effective_hamiltonian(b, qp);
  CHECK(ops::is_hermitian(h, 1e-12));
  const auto c = generator::heff_coefficients(b, qp, qp.omega0);
  CHECK(std::abs(h(2, 1) - (c.p(0, 1) + c.m(1, 0))) < 1e-14);
  CHECK(std::abs(h(1, 2) - std::conj(h(2, 1))) < 1e-14);
  // excitation-number conserving: no coupling between different sectors
  CHECK(std::abs(h(0, 1)) < 1e-14);
  CHECK(std::abs(h(0, 3)) < 1e-14);
  CHECK(std::abs(h(1, 3)) < 1e-14);
}

TEST_CASE("vacuum bath pushes the ground level down") {
  auto b = default_ohmic();
  b.beta = InverseTemperature::infinite();
  const Eigen::Matrix4cd h = generator::effective_hamiltonian(b, default_qubits());
  // <00|H_eff|00> = M_AA + M_BB < 0: second order lowers the ground state
  CHECK(h(0, 0).real() < 0.0);
}

TEST_CASE("negative rate matrix is rejected") {
  generator::RateMatrices rates;
  rates.gamma_plus << 1.0, 1.5, 1.5, 1.0;  // indefinite
  rates.gamma_minus.setZero();
  CHECK_THROWS_AS(generator::lindblads_from_rates(rates), invariant_error);
}

TEST_CASE("dispersion integrals agree with a dense independent evaluation") {
  const auto b = default_ohmic();
  const auto check =
      generator::dispersion_check(b, default_qubits(), {0.5, 1.0, 1.5});
  CHECK(check.max_residual < 1e-5);
}

TEST_SUITE_END();
