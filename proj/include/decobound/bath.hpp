// bath.hpp -- environment spectra, correlation functions, susceptibility,
// and detailed-balance diagnostics.
//
// Conventions: J_ab(omega) = \int dt C_ab(t) e^{i omega t} is the (Hermitian,
// PSD) power-spectrum matrix over coupling sites {A, B}; the KMS condition
// J(-omega) = e^{-beta omega} J(omega)^T holds for every valid spectrum.
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "decobound/types.hpp"

namespace decobound::bath {

using Eigen::Matrix2cd;

// n(omega) = 1/(e^{beta omega} - 1); n(-w) = -(1 + n(w)).
// beta = infinity: 0 for omega > 0, -1 for omega < 0.
double bose_occupation(InverseTemperature beta, double omega);

// Thermal Ohmic family with exponential cutoff and cross-correlation kappa:
//   J_AA(w) = J_BB(w) = 2 pi alpha w e^{-|w|/omega_c} / (1 - e^{-beta w}),
//   J_AB = J_BA = kappa * J_AA.
// Smooth at w = 0 with J_AA(0) = 2 pi alpha / beta; KMS by construction.
struct OhmicBath {
  double alpha = 0.1;
  double omega_c = 5.0;
  double kappa = 1.0;  // |kappa| <= 1 keeps the matrix PSD
  InverseTemperature beta = {};

  void validate() const;
  double j_diag(double omega) const;
  Matrix2cd spectral_matrix(double omega) const;
  // W such that |j_diag| < 1e-14 of its peak outside [-W, W]
  // (and W >= 10 max(omega_c, 1/beta)).
  double support_bound() const;
};

struct SpectralLine {
  double omega = 0.0;
  Matrix2cd weight = Matrix2cd::Zero();  // 2 pi x delta weight, Hermitian PSD
};

// Spectrum confined to discrete frequencies; negative-frequency KMS partners
// are stored explicitly so the object is self-validating.
struct DiscreteBath {
  InverseTemperature beta = {};
  std::vector<SpectralLine> lines;

  void validate() const;
  Matrix2cd weight_at(double omega) const;  // zero matrix if no line there

  // Single line at +Omega with weight amp*[[1,corr],[corr,1]] plus its thermal
  // partner at -Omega (omitted when the KMS factor is exactly zero).
  static DiscreteBath single_mode(double Omega, double amp, double corr,
                                  InverseTemperature beta);
};

Matrix2cd eval_spectrum(const OhmicBath& b, double omega);
Matrix2cd eval_spectrum(const DiscreteBath& b, double omega);

// C_ab(t) = (1/2pi) \int J_ab(w) e^{-iwt} dw; exact line sum in the discrete case.
Matrix2cd correlation_function(const OhmicBath& b, double t);
Matrix2cd correlation_function(const DiscreteBath& b, double t);

// chi_ba(w) = PV \int dw' (1 - e^{-beta w'}) J_ba(w') / (w - w')
//             - i pi (1 - e^{-beta w}) J_ba(w)          (w + i0+ convention)
Matrix2cd susceptibility(const OhmicBath& b, double omega);

// Both sides of Im chi_AB + Im chi_BA = J_AB(w) n(w) + J_BA(-w) n(-w),
// reported without asserting equality.
struct FdtReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};
FdtReport fdt_report(const OhmicBath& b, double omega);

}  // namespace decobound::bath
