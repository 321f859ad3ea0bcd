// discrete.hpp -- exact second-order map for discrete-line environments:
// the full Delta rho^(2)(t), its split into a time-dependent effective
// Hamiltonian plus a Lindblad-form dissipator, and the two
// decoherence-suppression strategies (off-resonant lines, psi-zero gate times).
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "decobound/bath.hpp"
#include "decobound/ops.hpp"
#include "decobound/types.hpp"

namespace decobound::discrete {

using Eigen::Matrix4cd;

// Composite jump index (site, sign) -> {A+, B+, A-, B-} ordering.
inline constexpr int jump_index(ops::Site site, Sign s) {
  return (s == Sign::plus ? 0 : 2) + static_cast<int>(site);
}
Matrix4cd jump_operator(int index);  // sigma_s^site for the composite index

Matrix4cd delta_rho2_discrete(const bath::DiscreteBath& spec, const QubitParams& qp,
                              const Matrix4cd& rho0, double t);

// Split of Delta rho^(2)(t) at fixed t:
//   Delta rho^(2) = -i t [h_eff_t, rho0]
//     + sum_{jk} K_{jk} (A_j rho0 A_k^+ - 1/2 {A_k^+ A_j, rho0})
// with A_j the jump operators above.  K is Hermitian but not necessarily PSD
// (non-Markovian); both pieces carry the lambda^2 prefactor.
struct Snapshot {
  double t = 0.0;
  Matrix4cd h_eff_t = Matrix4cd::Zero();
  Eigen::Matrix4cd dissipator;  // coefficient matrix K over the jump index
  Matrix4cd apply(const Matrix4cd& rho0) const;
};

Snapshot snapshot(const bath::DiscreteBath& spec, const QubitParams& qp, double t);

// Spectral norm of the dissipator coefficient matrix at time t.
double residual_decoherence(const bath::DiscreteBath& spec, const QubitParams& qp,
                            double t);

struct ScanRow {
  double t = 0.0;
  double residual = 0.0;
  double coherent_norm = 0.0;  // ||h_eff_t * t||
};

// Scan over t with an envelope fit of the residual against
// t^2 sinc^2(delta_omega t / 2), delta_omega the smallest detuning.
struct OffResonanceScan {
  std::vector<ScanRow> rows;
  double delta_omega = 0.0;
  double envelope_coefficient = 0.0;  // least-squares amplitude of the fit
  double envelope_error = 0.0;        // max |residual - fit| / max fit
};
OffResonanceScan off_resonance_scan(const bath::DiscreteBath& spec,
                                    const QubitParams& qp,
                                    const std::vector<double>& t_grid);

}  // namespace decobound::discrete
