// oracle.hpp -- ground-truth engines: exact unitary evolution of two qubits
// plus truncated bosonic modes (thermal environment, partial trace), and
// direct 2-D time quadrature of the general second-order expression.
#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "decobound/bath.hpp"
#include "decobound/ops.hpp"
#include "decobound/types.hpp"

namespace decobound::oracle {

using Eigen::Matrix4cd;
using Eigen::MatrixXcd;

struct Mode {
  double Omega = 1.0;  // mode frequency > 0
  double g_A = 1.0;    // displacement coupling to qubit A
  double g_B = 1.0;
  int fock_dim = 8;    // >= 2
};

// H = -(omega0/2)(sz_A + sz_B) + sum_n Omega_n a^+a
//     + lambda sum_a sx_a * O_a,   O_a = sum_n g_{a,n} (a_n + a_n^+).
struct OracleModel {
  QubitParams qp;
  std::vector<Mode> modes;
  InverseTemperature beta = {};

  void validate() const;  // dimension cap 4 prod(fock_dim) <= 4096, thermal tail < 1e-8
  int env_dim() const;
  // Smallest fock_dim with thermal tail below 1e-8 at this beta (>= 2).
  static int fock_dim_for(InverseTemperature beta, double Omega);
  // Spectral lines 2 pi g_a g_b (n+1) at +Omega and 2 pi g_a g_b n at -Omega
  // reproducing this model's correlation function exactly.
  bath::DiscreteBath discrete_bath() const;
};

MatrixXcd thermal_env_state(const OracleModel& model);
// |<O_A>| + |<O_B>| in the given environment state (thermal by default);
// must vanish for displacement coupling.
double first_order_check(const OracleModel& model);
double first_order_check(const OracleModel& model, const MatrixXcd& env_state);

// Evolves rho0 x rho_thermal under the full H, partial-traces the environment,
// and rotates into the interaction picture of the qubits.
Matrix4cd exact_reduced_evolution(const OracleModel& model, const Matrix4cd& rho0,
                                  double t);

// Direct 2-D quadrature of the second-order double time integrals with
// V_a(t) = sigma_+^a e^{-i omega0 t} + sigma_-^a e^{i omega0 t} and the given
// correlation function C_ab(tau); absolute tolerance 1e-9 per entry.
using CorrelationFn = std::function<Eigen::Matrix2cd(double)>;
Matrix4cd perturbative_direct(const CorrelationFn& corr, const QubitParams& qp,
                              const Matrix4cd& rho0, double t);

struct ConvergenceRow {
  double lambda = 0.0;
  double error = 0.0;  // Frobenius norm ||exact - (rho0 + Delta rho^(2))||
};
struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;
  double slope = 0.0;          // log-log fit over the nonzero rows
  bool regime_warning = false; // some ||Delta rho|| >= 0.1
};
// Lambda is swept by rescaling model.qp.lambda; the perturbative reference is
// the discrete-bath closed form for model.discrete_bath().
ConvergenceTable convergence_compare(const OracleModel& model, const Matrix4cd& rho0,
                                     double t, const std::vector<double>& lambdas);

// Partial trace over the environment factor of a (4*env_dim) density matrix.
Matrix4cd partial_trace_env(const MatrixXcd& rho_full, int env_dim);

}  // namespace decobound::oracle
