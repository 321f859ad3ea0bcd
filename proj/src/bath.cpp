#include "decobound/bath.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "decobound/quad.hpp"

namespace decobound::bath {

namespace {

const complexd i1(0.0, 1.0);

// e^{-beta omega} with the zero-temperature branches made explicit.
double kms_factor(InverseTemperature beta, double omega) {
  if (beta.is_infinite()) {
    if (omega > 0.0) return 0.0;
    if (omega < 0.0) return std::numeric_limits<double>::infinity();
    return 1.0;
  }
  return std::exp(-beta.beta * omega);
}

double mat_norm(const Matrix2cd& m) { return m.cwiseAbs().maxCoeff(); }

void check_weight(const SpectralLine& line, double scale) {
  if (mat_norm(line.weight - line.weight.adjoint()) > 1e-12 * std::max(1.0, scale))
    throw invariant_error("spectral weight not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix2cd> es(line.weight);
  if (es.eigenvalues().minCoeff() < -1e-12 * std::max(1.0, scale))
    throw invariant_error("spectral weight not positive semidefinite");
}

}  // namespace

double bose_occupation(InverseTemperature beta, double omega) {
  beta.validate();
  if (beta.is_infinite()) {
    if (omega > 0.0) return 0.0;
    if (omega < 0.0) return -1.0;
    return 0.0;  // vacuum at zero temperature and zero frequency
  }
  if (omega == 0.0)
    throw std::domain_error("occupation divergent at zero frequency");
  return 1.0 / std::expm1(beta.beta * omega);
}

void OhmicBath::validate() const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (!(omega_c > 0.0)) throw std::invalid_argument("omega_c must be positive");
  if (!(std::abs(kappa) <= 1.0))
    throw std::invalid_argument("kappa must lie in [-1, 1]");
  beta.validate();
}

double OhmicBath::j_diag(double omega) const {
  const double cut = std::exp(-std::abs(omega) / omega_c);
  if (beta.is_infinite()) return omega > 0.0 ? 2.0 * pi * alpha * omega * cut : 0.0;
  if (omega == 0.0) return 2.0 * pi * alpha / beta.beta;
  // omega (n(omega)+1) = omega / (1 - e^{-beta omega}), positive for all omega.
  return 2.0 * pi * alpha * omega * cut / (-std::expm1(-beta.beta * omega));
}

Matrix2cd OhmicBath::spectral_matrix(double omega) const {
  const double j = j_diag(omega);
  Matrix2cd m;
  m << j, kappa * j, kappa * j, j;
  return m;
}

double OhmicBath::support_bound() const {
  const double theta = beta.is_infinite() ? 0.0 : 1.0 / beta.beta;
  const double start = std::max({10.0 * std::max(omega_c, theta), 10.0});
  double peak = 0.0;
  for (int i = 1; i <= 400; ++i)
    peak = std::max(peak, j_diag(start * i / 400.0));
  double W = start;
  while (std::max(j_diag(W), j_diag(-W)) > 1e-14 * peak) {
    W *= 1.25;
    if (W > 1e9) throw numerical_error("spectral support bound not found");
  }
  return W;
}

void DiscreteBath::validate() const {
  beta.validate();
  if (lines.empty()) throw std::invalid_argument("discrete bath has no lines");
  double scale = 0.0;
  for (const auto& line : lines) scale = std::max(scale, mat_norm(line.weight));
  for (const auto& line : lines) check_weight(line, scale);
  for (size_t i = 0; i < lines.size(); ++i)
    for (size_t j = i + 1; j < lines.size(); ++j)
      if (std::abs(lines[i].omega - lines[j].omega) <=
          1e-9 * std::max(1.0, std::abs(lines[i].omega)))
        throw std::invalid_argument("line frequencies must be distinct");

  // Every non-negative line must have its (possibly zero-weight) thermal
  // partner; every negative line must be such a partner.
  for (const auto& line : lines) {
    if (line.omega < 0.0) {
      bool has_positive = false;
      for (const auto& other : lines)
        if (std::abs(other.omega + line.omega) <=
            1e-9 * std::max(1.0, std::abs(line.omega)))
          has_positive = true;
      if (!has_positive && mat_norm(line.weight) > 1e-14 * std::max(1.0, scale))
        throw invariant_error("negative-frequency line without KMS partner");
      continue;
    }
    const double f = kms_factor(beta, line.omega);
    const Matrix2cd expected = f * line.weight.transpose();
    const Matrix2cd partner = weight_at(-line.omega);
    if (mat_norm(partner - expected) > 1e-10 * std::max(1.0, mat_norm(line.weight))) {
      std::ostringstream msg;
      msg << "KMS partner mismatch at Omega=" << line.omega;
      throw invariant_error(msg.str());
    }
  }
}

Matrix2cd DiscreteBath::weight_at(double omega) const {
  for (const auto& line : lines)
    if (std::abs(line.omega - omega) <= 1e-9 * std::max(1.0, std::abs(omega)))
      return line.weight;
  return Matrix2cd::Zero();
}

DiscreteBath DiscreteBath::single_mode(double Omega, double amp, double corr,
                                       InverseTemperature beta) {
  if (!(Omega > 0.0)) throw std::invalid_argument("line frequency must be positive");
  if (!(amp >= 0.0)) throw std::invalid_argument("line amplitude must be non-negative");
  if (!(std::abs(corr) <= 1.0)) throw std::invalid_argument("corr must lie in [-1, 1]");
  Matrix2cd w;
  w << amp, corr * amp, corr * amp, amp;
  DiscreteBath b{beta, {{Omega, w}}};
  const double f = kms_factor(beta, Omega);
  if (f > 0.0) b.lines.push_back({-Omega, f * w.transpose()});
  b.validate();
  return b;
}

Matrix2cd eval_spectrum(const OhmicBath& b, double omega) {
  return b.spectral_matrix(omega);
}

Matrix2cd eval_spectrum(const DiscreteBath& b, double omega) {
  return b.weight_at(omega);
}

Matrix2cd correlation_function(const OhmicBath& b, double t) {
  const double W = b.support_bound();
  quad::Options opt;
  opt.max_panel_width = pi / std::max(std::abs(t), pi / (2.0 * W));
  opt.split_points = {0.0};  // |w| cutoff kink
  auto f = [&](double w) -> complexd {
    return b.j_diag(w) * complexd(std::cos(w * t), -std::sin(w * t));
  };
  const complexd c = quad::integrate(f, -W, W, opt) / (2.0 * pi);
  Matrix2cd m;
  m << c, b.kappa * c, b.kappa * c, c;
  return m;
}

Matrix2cd correlation_function(const DiscreteBath& b, double t) {
  Matrix2cd m = Matrix2cd::Zero();
  for (const auto& line : b.lines)
    m += line.weight * complexd(std::cos(line.omega * t), -std::sin(line.omega * t));
  return m / (2.0 * pi);
}

Matrix2cd susceptibility(const OhmicBath& b, double omega) {
  b.validate();
  const double W = std::max(b.support_bound(), 2.0 * std::abs(omega) + 1.0);
  // (1 - e^{-beta w'}) J(w') rewritten through KMS as j(w') - j(-w'), which is
  // overflow-free at any temperature (for this family it equals
  // 2 pi alpha w' e^{-|w'|/omega_c} identically).
  auto f = [&](double w) -> complexd { return b.j_diag(w) - b.j_diag(-w); };
  quad::Options opt;
  opt.split_points = {0.0};  // |w| cutoff kink
  // PV \int f(w')/(omega - w') dw' = -PV \int f(w')/(w' - omega) dw'
  const complexd principal = -quad::pv_integral(f, omega, -W, W, opt);
  const complexd scalar = principal - i1 * pi * f(omega).real();
  Matrix2cd m;
  m << scalar, b.kappa * scalar, b.kappa * scalar, scalar;
  return m;
}

FdtReport fdt_report(const OhmicBath& b, double omega) {
  const Matrix2cd chi = susceptibility(b, omega);
  FdtReport r;
  r.lhs = chi(0, 1).imag() + chi(1, 0).imag();
  const double n_plus = bose_occupation(b.beta, omega);
  const double n_minus = bose_occupation(b.beta, -omega);
  r.rhs = b.kappa * b.j_diag(omega) * n_plus + b.kappa * b.j_diag(-omega) * n_minus;
  r.residual = r.lhs - r.rhs;
  return r;
}

}  // namespace decobound::bath
