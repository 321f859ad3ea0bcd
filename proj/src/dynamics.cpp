#include "decobound/dynamics.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace decobound::dynamics {

void validate_state(const Matrix4cd& rho) {
  if (!ops::is_hermitian(rho, 1e-12))
    throw std::domain_error("state is not Hermitian");
  if (std::abs(rho.trace() - complexd(1.0)) > 1e-12)
    throw std::domain_error("state trace is not 1");
  if (ops::min_eigenvalue(rho) < -1e-10)
    throw std::domain_error("state has a negative eigenvalue");
}

std::vector<Matrix4cd> propagate(const ops::Matrix16cd& liouvillian,
                                 const Matrix4cd& rho0,
                                 const std::vector<double>& t_grid) {
  validate_state(rho0);
  if (t_grid.empty() || t_grid.front() != 0.0 ||
      !std::is_sorted(t_grid.begin(), t_grid.end()))
    throw std::invalid_argument("time grid must be ascending and start at 0");
  std::vector<Matrix4cd> out;
  out.reserve(t_grid.size());
  const ops::Vector16cd v0 = ops::vec(rho0);
  for (double t : t_grid) {
    const ops::Matrix16cd prop = (liouvillian * t).exp();
    const Matrix4cd rho = ops::unvec(prop * v0);
    if (std::abs(rho.trace() - complexd(1.0)) > 1e-10) {
      std::ostringstream msg;
      msg << "trace drift exceeds 1e-10 at t=" << t;
      throw numerical_error(msg.str());
    }
    out.push_back(rho);
  }
  return out;
}

double concurrence(const Matrix4cd& rho) {
  Matrix4cd yy = Matrix4cd::Zero();
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;  // sigma_y x sigma_y
  const Matrix4cd R = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4cd> es(R);
  std::array<double, 4> l{};
  for (int i = 0; i < 4; ++i)
    l[i] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(l.begin(), l.end(), std::greater<>());
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

StateMetrics state_metrics(const Matrix4cd& rho) {
  validate_state(rho);
  StateMetrics m;
  m.concurrence = concurrence(rho);
  m.purity = (rho * rho).trace().real();
  return m;
}

double trace_distance(const Matrix4cd& rho, const Matrix4cd& ref) {
  Eigen::SelfAdjointEigenSolver<Matrix4cd> es(rho - ref);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

FigureOfMerit figure_of_merit(const generator::EffectiveGenerator& gen) {
  const complexd h_ab = gen.h_eff(2, 1);  // <10|H_eff|01>
  if (std::abs(h_ab) == 0.0)
    throw std::domain_error("no environment-mediated coupling");
  FigureOfMerit fom;
  fom.t_gate = pi / (4.0 * std::abs(h_ab));
  const double rate =
      (gen.rates.gamma_plus.trace() + gen.rates.gamma_minus.trace()).real();
  if (rate <= 0.0) {
    fom.zero_rate_warning = true;
    fom.t_dec = std::numeric_limits<double>::infinity();
    fom.q = std::numeric_limits<double>::infinity();
    return fom;
  }
  fom.t_dec = 1.0 / rate;
  fom.q = fom.t_dec / fom.t_gate;
  return fom;
}

}  // namespace decobound::dynamics
