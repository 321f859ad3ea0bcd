#include <doctest.h>

#include <random>

#include "decobound/dynamics.hpp"
#include "oracles.hpp"

using namespace decobound;

namespace {

bath::OhmicBath default_ohmic() {
  bath::OhmicBath b;
  b.alpha = 0.05;
  b.omega_c = 5.0;
  b.kappa = 1.0;
  b.beta = InverseTemperature{2.0};
  return b;
}

Eigen::Matrix4cd pure(const Eigen::Vector4cd& v) { return v * v.adjoint(); }

}  // namespace

TEST_SUITE_BEGIN("dynamics");

TEST_CASE("state validation") {
  CHECK_NOTHROW(dynamics::validate_state(Eigen::Matrix4cd::Identity() / 4.0));
  Eigen::Matrix4cd bad_trace = Eigen::Matrix4cd::Identity();
  CHECK_THROWS_AS(dynamics::validate_state(bad_trace), std::domain_error);
  Eigen::Matrix4cd negative = Eigen::Matrix4cd::Zero();
  negative(0, 0) = 1.5;
  negative(1, 1) = -0.5;
  CHECK_THROWS_AS(dynamics::validate_state(negative), std::domain_error);
}

TEST_CASE("concurrence on known states") {
  CHECK(dynamics::concurrence(pure(ops::singlet())) == doctest::Approx(1.0));
  CHECK(dynamics::concurrence(pure(ops::bell_phi_plus())) == doctest::Approx(1.0));
  CHECK(dynamics::concurrence(pure(ops::basis_state(0, 1))) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(dynamics::concurrence(Eigen::Matrix4cd::Identity() / 4.0) ==
        doctest::Approx(0.0));
  // Werner state: C = max(0, (3p - 1)/2)
  for (double p : {0.2, 0.5, 0.9}) {
    const Eigen::Matrix4cd w =
        p * pure(ops::singlet()) + (1.0 - p) * Eigen::Matrix4cd::Identity() / 4.0;
    CHECK(dynamics::concurrence(w) ==
          doctest::Approx(std::max(0.0, (3.0 * p - 1.0) / 2.0)).epsilon(1e-10));
  }
}

TEST_CASE("trace distance basics") {
  const Eigen::Matrix4cd a = pure(ops::basis_state(0, 1));
  const Eigen::Matrix4cd b = pure(ops::basis_state(1, 0));
  CHECK(dynamics::trace_distance(a, b) == doctest::Approx(1.0));
  CHECK(dynamics::trace_distance(a, a) == doctest::Approx(0.0));
}

TEST_CASE("propagation agrees with an independent integrator") {
  std::mt19937_64 rng(41);
  const auto gen = generator::build_generator(default_ohmic(), {1.0, 0.1});
  const auto liouville = generator::assemble_liouvillian(gen);
  const Eigen::Matrix4cd rho0 = testoracle::random_density(rng);
  const double t = 3.0;
  const auto states = dynamics::propagate(liouville, rho0, {0.0, t});
  REQUIRE(states.size() == 2);
  CHECK((states[0] - rho0).cwiseAbs().maxCoeff() < 1e-14);
  const Eigen::Matrix4cd ref = testoracle::rk4_propagate(liouville, rho0, t);
  CHECK((states[1] - ref).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("propagation preserves state validity") {
  std::mt19937_64 rng(42);
  const auto gen = generator::build_generator(default_ohmic(), {1.0, 0.1});
  const auto liouville = generator::assemble_liouvillian(gen);
  for (int k = 0; k < 5; ++k) {
    const Eigen::Matrix4cd rho0 = testoracle::random_density(rng);
    for (const auto& rho : dynamics::propagate(liouville, rho0, {0.0, 1.0, 40.0})) {
      CHECK(std::abs(rho.trace() - 1.0) < 1e-10);
      CHECK(ops::min_eigenvalue(rho) > -1e-8);
    }
  }
}

TEST_CASE("propagate rejects bad grids") {
  const auto liouville = ops::Matrix16cd::Zero().eval();
  const Eigen::Matrix4cd rho0 = Eigen::Matrix4cd::Identity() / 4.0;
  CHECK_THROWS_AS(dynamics::propagate(liouville, rho0, {1.0, 2.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(dynamics::propagate(liouville, rho0, {0.0, 2.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("figure of merit is independent of the coupling strength") {
  const auto b = default_ohmic();
  std::vector<double> qs;
  for (double lam : {0.01, 0.1, 1.0}) {
    const auto gen = generator::build_generator(b, {1.0, lam});
    const auto fom = dynamics::figure_of_merit(gen);
    CHECK(fom.t_gate > 0.0);
    CHECK(fom.t_dec > 0.0);
    CHECK_FALSE(fom.zero_rate_warning);
    qs.push_back(fom.q);
  }
  CHECK(std::abs(qs[1] - qs[0]) < 1e-12 * std::abs(qs[0]));
  CHECK(std::abs(qs[2] - qs[0]) < 1e-12 * std::abs(qs[0]));
}

TEST_CASE("vanishing coupling raises instead of dividing by zero") {
  auto b = default_ohmic();
  b.kappa = 0.0;  // uncorrelated environments: no mediated flip-flop
  const auto gen = generator::build_generator(b, {1.0, 0.1});
  CHECK_THROWS_WITH_AS(dynamics::figure_of_merit(gen),
                       "no environment-mediated coupling", std::domain_error);
}

TEST_CASE("zero-rate generator flags an infinite figure of merit") {
  generator::EffectiveGenerator gen;
  gen.h_eff.setZero();
  gen.h_eff(2, 1) = gen.h_eff(1, 2) = 0.01;
  gen.rates.gamma_plus.setZero();
  gen.rates.gamma_minus.setZero();
  const auto fom = dynamics::figure_of_merit(gen);
  CHECK(fom.zero_rate_warning);
  CHECK(std::isinf(fom.t_dec));
  CHECK(std::isinf(fom.q));
}

TEST_SUITE_END();
