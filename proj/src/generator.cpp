#include "decobound/generator.hpp"

#include <cmath>
#include <utility>

#include "decobound/quad.hpp"

namespace decobound::generator {

namespace {

using ops::Site;
using ops::sites;

Matrix2cd correlation_pattern(const bath::OhmicBath& spec) {
  Matrix2cd m;
  m << 1.0, spec.kappa, spec.kappa, 1.0;
  return m;
}

// PV \int_{-W}^{W} f(w)/(w - pole) dw on a staggered midpoint grid symmetric
// about the pole (nodes never hit it, singular parts cancel pairwise), plus
// composite Simpson on the outer intervals.  Deliberately independent of the
// adaptive quadrature in quad.cpp; used as the second route in
// dispersion_check.
double dense_pv(const std::function<double(double)>& f, double pole, double W) {
  const double d = std::min(1.0, 0.5 * std::min(W - pole, W + pole));
  const int m = 20000;
  const double h = d / m;
  double inner = 0.0;
  for (int j = 0; j < m; ++j) {
    const double u = (j + 0.5) * h;
    inner += (f(pole + u) - f(pole - u)) / u;
  }
  inner *= h;

  auto simpson = [&](double a, double b) {
    const int n = 2 * std::max(1, static_cast<int>((b - a) / 2e-3));
    const double step = (b - a) / n;
    auto g = [&](double w) { return f(w) / (w - pole); };
    double s = g(a) + g(b);
    for (int j = 1; j < n; ++j) s += (j % 2 ? 4.0 : 2.0) * g(a + j * step);
    return s * step / 3.0;
  };
  double outer = 0.0;
  if (pole - d > -W) outer += simpson(-W, pole - d);
  if (W - pole > d) outer += simpson(pole + d, W);
  return inner + outer;
}

}  // namespace

HeffCoefficients heff_coefficients(const bath::OhmicBath& spec, const QubitParams& qp,
                                   double omega) {
  spec.validate();
  qp.validate();
  const double W = std::max(spec.support_bound(), 2.0 * std::abs(omega) + 1.0);
  auto f = [&](double w) -> complexd { return spec.j_diag(w); };
  quad::Options opt;
  opt.split_points = {0.0};  // |w| cutoff kink
  const double l2 = qp.lambda * qp.lambda;
  const double p_scalar = -quad::pv_integral(f, omega, -W, W, opt).real() / (2.0 * pi);
  const double m_scalar = -quad::pv_integral(f, -omega, -W, W, opt).real() / (2.0 * pi);
  HeffCoefficients c;
  c.p = l2 * p_scalar * correlation_pattern(spec);
  c.m = l2 * m_scalar * correlation_pattern(spec);
  return c;
}

Matrix4cd effective_hamiltonian(const bath::OhmicBath& spec, const QubitParams& qp) {
  const HeffCoefficients c = heff_coefficients(spec, qp, qp.omega0);
  Matrix4cd h = Matrix4cd::Zero();
  for (Site a : sites)
    for (Site b : sites) {
      const int ia = static_cast<int>(a), ib = static_cast<int>(b);
      h += c.p(ia, ib) * ops::sigma(Sign::minus, a) * ops::sigma(Sign::plus, b);
      h += c.m(ia, ib) * ops::sigma(Sign::plus, a) * ops::sigma(Sign::minus, b);
    }
  return h;
}

std::vector<Matrix4cd> lindblads_from_rates(const RateMatrices& rates) {
  std::vector<Matrix4cd> out;
  const std::pair<const Matrix2cd*, Sign> channels[2] = {
      {&rates.gamma_plus, Sign::plus}, {&rates.gamma_minus, Sign::minus}};
  for (const auto& [gamma, s] : channels) {
    const double scale = std::max(1.0, gamma->cwiseAbs().maxCoeff());
    Eigen::SelfAdjointEigenSolver<Matrix2cd> es(*gamma);
    for (int mu = 0; mu < 2; ++mu) {
      const double g = es.eigenvalues()(mu);
      if (g < -1e-12 * scale)
        throw invariant_error("rate matrix not positive semidefinite");
      if (g <= 0.0) continue;
      const Eigen::Vector2cd v = es.eigenvectors().col(mu);
      Matrix4cd L = Matrix4cd::Zero();
      for (Site b : sites)
        L += std::conj(v(static_cast<int>(b))) * ops::sigma(s, b);
      out.push_back(std::sqrt(g) * L);
    }
  }
  return out;
}

std::pair<RateMatrices, std::vector<Matrix4cd>> lindblad_decomposition(
    const bath::OhmicBath& spec, const QubitParams& qp) {
  spec.validate();
  qp.validate();
  const double l2 = qp.lambda * qp.lambda;
  RateMatrices r;
  r.gamma_plus = l2 * spec.spectral_matrix(qp.omega0);
  r.gamma_minus = l2 * spec.spectral_matrix(-qp.omega0);
  return {r, lindblads_from_rates(r)};
}

EffectiveGenerator build_generator(const bath::OhmicBath& spec, const QubitParams& qp) {
  EffectiveGenerator gen;
  gen.h_eff = effective_hamiltonian(spec, qp);
  auto [rates, ls] = lindblad_decomposition(spec, qp);
  gen.rates = rates;
  gen.lindblads = std::move(ls);
  return gen;
}

ops::Matrix16cd assemble_liouvillian(const EffectiveGenerator& gen) {
  const Matrix4cd id = Matrix4cd::Identity();
  const Matrix4cd& h = gen.h_eff;
  ops::Matrix16cd L = complexd(0.0, -1.0) *
                      (ops::kron16(id, h) - ops::kron16(h.transpose(), id));
  for (const Matrix4cd& jump : gen.lindblads) {
    const Matrix4cd dag = jump.adjoint() * jump;
    L += ops::kron16(jump.conjugate(), jump);
    L -= 0.5 * ops::kron16(id, dag);
    L -= 0.5 * ops::kron16(dag.transpose(), id);
  }
  return L;
}

DispersionCheck dispersion_check(const bath::OhmicBath& spec, const QubitParams& qp,
                                 const std::vector<double>& omega_grid) {
  spec.validate();
  qp.validate();
  DispersionCheck out;
  double worst_abs = 0.0, scale = 0.0;
  auto f = [&](double w) { return spec.j_diag(w); };
  for (double omega : omega_grid) {
    const double W = std::max(spec.support_bound(), 2.0 * std::abs(omega) + 1.0);
    const HeffCoefficients c = heff_coefficients(spec, qp, omega);
    // The rate weight at operating frequency w' is lambda^2 J(w'); its
    // dispersion integral must reproduce the Hamiltonian coefficients.
    const double l2 = qp.lambda * qp.lambda;
    const double p_ref = -l2 * dense_pv(f, omega, W) / (2.0 * pi);
    const double m_ref = -l2 * dense_pv(f, -omega, W) / (2.0 * pi);
    worst_abs = std::max({worst_abs, std::abs(c.p(0, 0).real() - p_ref),
                          std::abs(c.m(0, 0).real() - m_ref)});
    scale = std::max({scale, std::abs(p_ref), std::abs(m_ref)});
  }
  out.max_residual = scale > 0.0 ? worst_abs / scale : worst_abs;
  return out;
}

}  // namespace decobound::generator
