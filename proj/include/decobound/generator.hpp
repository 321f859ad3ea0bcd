// generator.hpp -- time-independent effective generator for continuous spectra:
// effective Hamiltonian from principal-value integrals, Lindblad operators from
// diagonalizing the rate quadratic forms, and the assembled Liouvillian.
//
// Everything lives in the interaction picture (frame rotating at omega0); the
// secular s = s' kernel contributions are dropped, as appropriate for spectra
// smooth on the scale 1/t.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "decobound/bath.hpp"
#include "decobound/ops.hpp"
#include "decobound/types.hpp"

namespace decobound::generator {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;

struct RateMatrices {
  Matrix2cd gamma_plus = Matrix2cd::Zero();   // lambda^2 J(+omega0), sigma_+ channels
  Matrix2cd gamma_minus = Matrix2cd::Zero();  // lambda^2 J(-omega0), sigma_- channels
};

struct EffectiveGenerator {
  Matrix4cd h_eff = Matrix4cd::Zero();
  std::vector<Matrix4cd> lindblads;  // rate weights folded in: L = sqrt(g) sum_b v_b* sigma_s^b
  RateMatrices rates;
};

// Coefficient matrices of the effective Hamiltonian at operating frequency w,
// with second-order energy denominators (system energy minus intermediate):
//   P_ab = lambda^2 PV \int dw'/2pi J_ab(w') / (w - w')    (sigma_-^a sigma_+^b terms)
//   M_ab = -lambda^2 PV \int dw'/2pi J_ab(w') / (w' + w)   (sigma_+^a sigma_-^b terms)
// For one qubit and a vacuum line this reproduces the Rayleigh-Schrodinger
// level shifts, and the long-time limit of the exact discrete-spectrum
// snapshot Hamiltonian.
struct HeffCoefficients {
  Matrix2cd p = Matrix2cd::Zero();
  Matrix2cd m = Matrix2cd::Zero();
};
HeffCoefficients heff_coefficients(const bath::OhmicBath& spec, const QubitParams& qp,
                                   double omega);

Matrix4cd effective_hamiltonian(const bath::OhmicBath& spec, const QubitParams& qp);

std::pair<RateMatrices, std::vector<Matrix4cd>> lindblad_decomposition(
    const bath::OhmicBath& spec, const QubitParams& qp);
// Same diagonalization applied to explicit rate matrices (used by tests and
// for engineered spectra).
std::vector<Matrix4cd> lindblads_from_rates(const RateMatrices& rates);

EffectiveGenerator build_generator(const bath::OhmicBath& spec, const QubitParams& qp);

// Superoperator L with vec(rho') = L vec(rho) for
// -i[H, rho] + sum_mu (L_mu rho L_mu^+ - 1/2 {L_mu^+ L_mu, rho}).
ops::Matrix16cd assemble_liouvillian(const EffectiveGenerator& gen);

// Compares the adaptive-PV effective-Hamiltonian coefficients on a frequency
// grid against an independent dense-grid PV evaluation of the same dispersion
// integral over the rate weights; returns the worst relative residual.
struct DispersionCheck {
  double max_residual = 0.0;
};
DispersionCheck dispersion_check(const bath::OhmicBath& spec, const QubitParams& qp,
                                 const std::vector<double>& omega_grid);

}  // namespace decobound::generator
