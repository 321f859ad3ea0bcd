// dynamics.hpp -- propagation under a Liouvillian and the derived metrics:
// concurrence, purity, trace distance, gate/decoherence times, figure of merit.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "decobound/generator.hpp"
#include "decobound/ops.hpp"
#include "decobound/types.hpp"

namespace decobound::dynamics {

using Eigen::Matrix4cd;

// Density-matrix validity: Hermitian (1e-12), unit trace (1e-12),
// min eigenvalue >= -1e-10.  Throws std::domain_error otherwise.
void validate_state(const Matrix4cd& rho);

// rho(t) = unvec(e^{L t} vec(rho0)) on an ascending grid starting at 0,
// via scaling-and-squaring matrix exponential.  Trace drift beyond 1e-10
// raises numerical_error with the offending time.
std::vector<Matrix4cd> propagate(const ops::Matrix16cd& liouvillian,
                                 const Matrix4cd& rho0,
                                 const std::vector<double>& t_grid);

struct StateMetrics {
  double concurrence = 0.0;  // Wootters
  double purity = 0.0;       // tr rho^2
};
StateMetrics state_metrics(const Matrix4cd& rho);
double concurrence(const Matrix4cd& rho);
double trace_distance(const Matrix4cd& rho, const Matrix4cd& ref);

struct FigureOfMerit {
  double t_gate = 0.0;           // pi / (4 |h_AB|), flip-flop entangling time
  double t_dec = 0.0;            // 1 / (tr Gamma_+ + tr Gamma_-)
  double q = 0.0;                // t_dec / t_gate, invariant under lambda rescaling
  bool zero_rate_warning = false;  // Gamma_tot = 0 with h_AB != 0: q = +infinity
};

// h_AB is the <10|H_eff|01> flip-flop element.  h_AB = 0 raises
// std::domain_error("no environment-mediated coupling").
FigureOfMerit figure_of_merit(const generator::EffectiveGenerator& gen);

}  // namespace decobound::dynamics
