#include "decobound/discrete.hpp"

#include <cmath>

#include "decobound/kernels.hpp"

namespace decobound::discrete {

namespace {

using ops::Site;
using ops::sites;

Matrix4cd jump_table(int index) {
  const Sign s = index < 2 ? Sign::plus : Sign::minus;
  const Site c = index % 2 == 0 ? Site::A : Site::B;
  return ops::sigma(s, c);
}

double spectral_norm(const Eigen::Matrix4cd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(hermitian);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

Matrix4cd jump_operator(int index) {
  if (index < 0 || index > 3) throw std::invalid_argument("jump index out of range");
  return jump_table(index);
}

Matrix4cd delta_rho2_discrete(const bath::DiscreteBath& spec, const QubitParams& qp,
                              const Matrix4cd& rho0, double t) {
  spec.validate();
  qp.validate();
  if (t < 0.0) throw std::domain_error("time must be non-negative");
  const double l2 = qp.lambda * qp.lambda;
  Matrix4cd out = Matrix4cd::Zero();
  for (const auto& line : spec.lines)
    for (Site a : sites)
      for (Site b : sites) {
        const complexd coeff =
            l2 * line.weight(static_cast<int>(a), static_cast<int>(b)) / (2.0 * pi);
        for (Sign s : signs)
          for (Sign s2 : signs) {
            const complexd ps = kernels::eval_psi(s, s2, t, line.omega, qp.omega0);
            const complexd ph = kernels::eval_phi(s, s2, t, line.omega, qp.omega0);
            const Matrix4cd sb = ops::sigma(s, b);
            const Matrix4cd sa = ops::sigma(s2, a);
            const Matrix4cd X = sa * sb;
            out += coeff * ps * sb * rho0 * sa;
            out -= coeff * ph * X * rho0;
            out -= std::conj(coeff * ph) * rho0 * X.adjoint();
          }
      }
  return out;
}

Matrix4cd Snapshot::apply(const Matrix4cd& rho0) const {
  const complexd it(0.0, t);
  Matrix4cd out = -it * (h_eff_t * rho0 - rho0 * h_eff_t);
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 4; ++k) {
      const complexd K = dissipator(j, k);
      if (K == complexd(0.0)) continue;
      const Matrix4cd Aj = jump_table(j), Ak = jump_table(k);
      const Matrix4cd KAJ = Ak.adjoint() * Aj;
      out += K * (Aj * rho0 * Ak.adjoint() - 0.5 * (KAJ * rho0 + rho0 * KAJ));
    }
  return out;
}

Snapshot snapshot(const bath::DiscreteBath& spec, const QubitParams& qp, double t) {
  spec.validate();
  qp.validate();
  if (!(t > 0.0))
    throw std::domain_error("snapshot requires t > 0");
  const double l2 = qp.lambda * qp.lambda;
  Snapshot snap;
  snap.t = t;
  snap.dissipator = Eigen::Matrix4cd::Zero();
  // T collects the phi weights; the split is
  //   Delta rho^(2) = -i[(T - T^+)/2i, rho0] + Lindblad part,
  // exact because psi_ss' = phi_ss' + conj(phi_{-s',-s}) turns the remaining
  // (T + T^+)/2 anticommutator into the -1/2 {A^+A, rho} of the dissipator.
  Matrix4cd T = Matrix4cd::Zero();
  for (const auto& line : spec.lines)
    for (Site a : sites)
      for (Site b : sites) {
        const complexd coeff =
            l2 * line.weight(static_cast<int>(a), static_cast<int>(b)) / (2.0 * pi);
        for (Sign s : signs)
          for (Sign s2 : signs) {
            const complexd ph = kernels::eval_phi(s, s2, t, line.omega, qp.omega0);
            const complexd ps = kernels::eval_psi(s, s2, t, line.omega, qp.omega0);
            T += coeff * ph * ops::sigma(s2, a) * ops::sigma(s, b);
            snap.dissipator(jump_index(b, s), jump_index(a, flip(s2))) += coeff * ps;
          }
      }
  snap.h_eff_t = (T - T.adjoint()) / complexd(0.0, 2.0 * t);
  return snap;
}

double residual_decoherence(const bath::DiscreteBath& spec, const QubitParams& qp,
                            double t) {
  return spectral_norm(snapshot(spec, qp, t).dissipator);
}

OffResonanceScan off_resonance_scan(const bath::DiscreteBath& spec,
                                    const QubitParams& qp,
                                    const std::vector<double>& t_grid) {
  spec.validate();
  qp.validate();
  OffResonanceScan scan;
  double delta = std::numeric_limits<double>::infinity();
  for (const auto& line : spec.lines) {
    const double d = std::abs(std::abs(line.omega) - qp.omega0);
    if (d <= 1e-12 * std::max(1.0, std::abs(line.omega)))
      throw std::domain_error("resonant line present");
    delta = std::min(delta, d);
  }
  scan.delta_omega = delta;

  for (double t : t_grid) {
    ScanRow row;
    row.t = t;
    if (t > 0.0) {
      const Snapshot snap = snapshot(spec, qp, t);
      row.residual = spectral_norm(snap.dissipator);
      row.coherent_norm = spectral_norm(t * snap.h_eff_t);
    }
    scan.rows.push_back(row);
  }

  auto envelope = [&](double t) {
    const double h = delta * t / 2.0;
    const double s = std::abs(h) < 1e-8 ? 1.0 - h * h / 6.0 : std::sin(h) / h;
    return t * t * s * s;
  };
  double num = 0.0, den = 0.0;
  for (const auto& row : scan.rows) {
    const double e = envelope(row.t);
    num += row.residual * e;
    den += e * e;
  }
  scan.envelope_coefficient = den > 0.0 ? num / den : 0.0;
  double worst = 0.0, peak = 0.0;
  for (const auto& row : scan.rows) {
    const double fit = scan.envelope_coefficient * envelope(row.t);
    worst = std::max(worst, std::abs(row.residual - fit));
    peak = std::max(peak, fit);
  }
  scan.envelope_error = peak > 0.0 ? worst / peak : 0.0;
  return scan;
}

}  // namespace decobound::discrete
