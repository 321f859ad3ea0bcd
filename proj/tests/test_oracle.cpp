#include <doctest.h>

#include <random>

#include "decobound/discrete.hpp"
#include "decobound/oracle.hpp"
#include "oracles.hpp"

using namespace decobound;

namespace {

oracle::OracleModel warm_model() {
  oracle::OracleModel m;
  m.qp = {1.0, 0.1};
  m.beta = InverseTemperature{2.0};
  m.modes = {{1.3, 0.2, 0.2, 9}};
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("oracle");

TEST_CASE("fock dimension selection") {
  CHECK(oracle::OracleModel::fock_dim_for(InverseTemperature{2.0}, 1.3) == 9);
  CHECK(oracle::OracleModel::fock_dim_for(InverseTemperature::infinite(), 1.3) == 2);
  // hotter baths need more levels
  CHECK(oracle::OracleModel::fock_dim_for(InverseTemperature{0.5}, 1.3) >
        oracle::OracleModel::fock_dim_for(InverseTemperature{2.0}, 1.3));
}

TEST_CASE("model validation enforces truncation quality and size cap") {
  auto m = warm_model();
  CHECK_NOTHROW(m.validate());
  m.modes[0].fock_dim = 3;  // tail e^{-7.8} ~ 4e-4
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
  m.modes[0].fock_dim = 2048;
  CHECK_THROWS_AS(m.validate(), std::invalid_argument);
}

TEST_CASE("discrete bath of a mode model carries thermal line weights") {
  const auto m = warm_model();
  const auto b = m.discrete_bath();
  const double n = bath::bose_occupation(m.beta, 1.3);
  const Eigen::Matrix2cd wp = b.weight_at(1.3);
  const Eigen::Matrix2cd wm = b.weight_at(-1.3);
  CHECK(wp(0, 0).real() == doctest::Approx(2.0 * pi * 0.04 * (n + 1.0)).epsilon(1e-12));
  CHECK(wp(0, 1).real() == doctest::Approx(2.0 * pi * 0.04 * (n + 1.0)).epsilon(1e-12));
  CHECK(wm(0, 0).real() == doctest::Approx(2.0 * pi * 0.04 * n).epsilon(1e-12));
  CHECK_NOTHROW(b.validate());

  // correlation functions of model bath and line sum must coincide
  const double t = 0.7;
  const Eigen::Matrix2cd c = bath::correlation_function(b, t);
  const complexd expect =
      0.04 * ((n + 1.0) * std::polar(1.0, -1.3 * t) + n * std::polar(1.0, 1.3 * t));
  CHECK(std::abs(c(0, 0) - expect) < 1e-14);
}

TEST_CASE("thermal state is boltzmann on each mode") {
  const auto m = warm_model();
  const Eigen::MatrixXcd env = oracle::thermal_env_state(m);
  CHECK(std::abs(env.trace() - 1.0) < 1e-12);
  CHECK(std::abs(env(1, 1) / env(0, 0) - std::exp(-2.6)) < 1e-12);
  CHECK(env.cwiseAbs().maxCoeff() == doctest::Approx(env(0, 0).real()));
  CHECK(oracle::first_order_check(m) < 1e-12);
}

TEST_CASE("uncoupled model leaves the state untouched") {
  std::mt19937_64 rng(51);
  auto m = warm_model();
  m.qp.lambda = 0.0;
  const Eigen::Matrix4cd rho0 = testoracle::random_density(rng);
  const Eigen::Matrix4cd out = oracle::exact_reduced_evolution(m, rho0, 4.0);
  CHECK((out - rho0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("partial trace recovers the system factor") {
  std::mt19937_64 rng(52);
  const Eigen::Matrix4cd rho_sys = testoracle::random_density(rng);
  const int d = 5;
  Eigen::MatrixXcd rho_env = Eigen::MatrixXcd::Zero(d, d);
  double z = 0.0;
  for (int k = 0; k < d; ++k) z += std::exp(-0.6 * k);
  for (int k = 0; k < d; ++k) rho_env(k, k) = std::exp(-0.6 * k) / z;
  Eigen::MatrixXcd full = Eigen::MatrixXcd::Zero(4 * d, 4 * d);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      full.block(i * d, j * d, d, d) = rho_sys(i, j) * rho_env;
  CHECK((oracle::partial_trace_env(full, d) - rho_sys).cwiseAbs().maxCoeff() < 1e-13);
  CHECK_THROWS_AS(oracle::partial_trace_env(full, d + 1), std::invalid_argument);
}

TEST_CASE("direct quadrature vanishes at t = 0 and rejects t < 0") {
  const auto m = warm_model();
  const auto b = m.discrete_bath();
  const auto corr = [&](double tau) { return bath::correlation_function(b, tau); };
  const Eigen::Matrix4cd rho0 = ops::basis_state(0, 1) * ops::basis_state(0, 1).adjoint();
  CHECK(oracle::perturbative_direct(corr, m.qp, rho0, 0.0).cwiseAbs().maxCoeff() <
        1e-15);
  CHECK_THROWS_AS(oracle::perturbative_direct(corr, m.qp, rho0, -1.0),
                  std::domain_error);
}

TEST_CASE("exact evolution confirms the fourth-order remainder") {
  const auto m = warm_model();
  const Eigen::Matrix4cd rho0 =
      ops::basis_state(0, 1) * ops::basis_state(0, 1).adjoint();
  const auto table =
      oracle::convergence_compare(m, rho0, 5.0, {0.2, 0.1, 0.05});
  REQUIRE(table.rows.size() == 3);
  for (const auto& row : table.rows) CHECK(row.error > 0.0);
  // odd orders vanish for displacement coupling to a thermal environment, so
  // the remainder after subtracting the second order scales as lambda^4
  CHECK(table.slope > 3.6);
  CHECK(table.slope < 4.4);
  const double ratio = table.rows[0].error / table.rows[1].error;
  CHECK(ratio > 13.0);
  CHECK(ratio < 19.0);
}

TEST_SUITE_END();
