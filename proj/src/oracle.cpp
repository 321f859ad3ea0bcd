#include "decobound/oracle.hpp"

#include <cmath>
#include <sstream>

#include "decobound/discrete.hpp"
#include "decobound/dynamics.hpp"

namespace decobound::oracle {

namespace {

using Eigen::Matrix2cd;
using Eigen::VectorXd;

MatrixXcd kronx(const MatrixXcd& a, const MatrixXcd& b) {
  MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Embed a single-mode operator at position k of the mode chain.
MatrixXcd embed(const OracleModel& model, int k, const MatrixXcd& op) {
  MatrixXcd out = MatrixXcd::Identity(1, 1);
  for (size_t n = 0; n < model.modes.size(); ++n) {
    const int d = model.modes[n].fock_dim;
    out = kronx(out, static_cast<int>(n) == k ? op : MatrixXcd::Identity(d, d));
  }
  return out;
}

MatrixXcd ladder(int d) {
  MatrixXcd a = MatrixXcd::Zero(d, d);
  for (int n = 1; n < d; ++n) a(n - 1, n) = std::sqrt(double(n));
  return a;
}

MatrixXcd displacement_op(const OracleModel& model, ops::Site site) {
  const int D = model.env_dim();
  MatrixXcd out = MatrixXcd::Zero(D, D);
  for (size_t n = 0; n < model.modes.size(); ++n) {
    const MatrixXcd a = ladder(model.modes[n].fock_dim);
    const double g = site == ops::Site::A ? model.modes[n].g_A : model.modes[n].g_B;
    out += g * embed(model, static_cast<int>(n), a + a.adjoint());
  }
  return out;
}

Matrix4cd two_qubit_hamiltonian(double omega0) {
  Matrix4cd h = Matrix4cd::Zero();
  h(0, 0) = -omega0;
  h(3, 3) = omega0;
  return h;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration.
void gauss_legendre(int n, VectorXd& x, VectorXd& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double z = std::cos(pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    x(i) = -z;
    x(n - 1 - i) = z;
    w(i) = w(n - 1 - i) = 2.0 / ((1.0 - z * z) * pp * pp);
  }
}

struct PanelRule {
  std::vector<double> node, weight;
};

PanelRule panel_rule(double a, double b, int panels) {
  static VectorXd gx, gw;
  if (gx.size() == 0) gauss_legendre(16, gx, gw);
  PanelRule r;
  const double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < 16; ++k) {
      r.node.push_back(mid + 0.5 * h * gx(k));
      r.weight.push_back(0.5 * h * gw(k));
    }
  }
  return r;
}

// One evaluation of both double integrals of the second-order expression at a
// fixed panel count; sandwich term over the full square, ordered term over the
// upper triangle t'' > t'.
Matrix4cd second_order_pass(const CorrelationFn& corr, const QubitParams& qp,
                            const Matrix4cd& rho0, double t, int panels) {
  const double w0 = qp.omega0;
  complexd square[2][2][2][2] = {};    // [s][s'][b][a]
  complexd triangle[2][2][2][2] = {};  // [s][s'][a][b]

  const PanelRule outer = panel_rule(0.0, t, panels);
  std::vector<Matrix2cd> cvals(outer.node.size() * outer.node.size());
  for (size_t i = 0; i < outer.node.size(); ++i)
    for (size_t j = 0; j < outer.node.size(); ++j)
      cvals[i * outer.node.size() + j] = corr(outer.node[j] - outer.node[i]);
  for (size_t i = 0; i < outer.node.size(); ++i) {
    const complexd pa[2] = {std::polar(1.0, -w0 * outer.node[i]),
                            std::polar(1.0, +w0 * outer.node[i])};
    for (size_t j = 0; j < outer.node.size(); ++j) {
      const complexd pb[2] = {std::polar(1.0, -w0 * outer.node[j]),
                              std::polar(1.0, +w0 * outer.node[j])};
      const Matrix2cd& c = cvals[i * outer.node.size() + j];
      const double wij = outer.weight[i] * outer.weight[j];
      for (int s = 0; s < 2; ++s)
        for (int s2 = 0; s2 < 2; ++s2)
          for (int bi = 0; bi < 2; ++bi)
            for (int ai = 0; ai < 2; ++ai)
              square[s][s2][bi][ai] += wij * pa[s] * pb[s2] * c(bi, ai);
    }
  }

  // inner panels shrink with the inner interval; keep the density comparable
  for (size_t i = 0; i < outer.node.size(); ++i) {
    const double t1 = outer.node[i];
    const int inner_panels =
        std::max(1, static_cast<int>(std::ceil(panels * (t - t1) / t)));
    const PanelRule inner = panel_rule(t1, t, inner_panels);
    const complexd pb[2] = {std::polar(1.0, -w0 * t1), std::polar(1.0, +w0 * t1)};
    for (size_t j = 0; j < inner.node.size(); ++j) {
      const Matrix2cd c = corr(inner.node[j] - t1);
      const complexd pa[2] = {std::polar(1.0, -w0 * inner.node[j]),
                              std::polar(1.0, +w0 * inner.node[j])};
      const double wij = outer.weight[i] * inner.weight[j];
      for (int s = 0; s < 2; ++s)
        for (int s2 = 0; s2 < 2; ++s2)
          for (int ai = 0; ai < 2; ++ai)
            for (int bi = 0; bi < 2; ++bi)
              triangle[s][s2][ai][bi] += wij * pa[s] * pb[s2] * c(ai, bi);
    }
  }

  const double l2 = qp.lambda * qp.lambda;
  Matrix4cd out = Matrix4cd::Zero();
  for (int s = 0; s < 2; ++s)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int ai = 0; ai < 2; ++ai)
        for (int bi = 0; bi < 2; ++bi) {
          const Matrix4cd sa = ops::sigma(signs[s], ops::sites[ai]);
          const Matrix4cd sb = ops::sigma(signs[s2], ops::sites[bi]);
          out += l2 * square[s][s2][bi][ai] * sa * rho0 * sb;
          const Matrix4cd ordered = sa * sb;
          const complexd tri = triangle[s][s2][ai][bi];
          out -= l2 * (tri * ordered * rho0 + std::conj(tri) * rho0 * ordered.adjoint());
        }
  return out;
}

}  // namespace

void OracleModel::validate() const {
  qp.validate();
  beta.validate();
  if (modes.empty()) throw std::invalid_argument("oracle model has no modes");
  long dim = 4;
  for (const auto& m : modes) {
    if (!(m.Omega > 0.0)) throw std::invalid_argument("mode frequency must be positive");
    if (m.fock_dim < 2) throw std::invalid_argument("fock_dim must be at least 2");
    dim *= m.fock_dim;
    if (dim > 4096) throw std::invalid_argument("Hilbert dimension cap 4096 exceeded");
    if (!beta.is_infinite()) {
      const double tail = std::exp(-m.fock_dim * beta.beta * m.Omega);
      if (tail >= 1e-8) {
        std::ostringstream msg;
        msg << "thermal truncation error " << tail << " at Omega=" << m.Omega
            << "; need fock_dim >= " << fock_dim_for(beta, m.Omega);
        throw std::invalid_argument(msg.str());
      }
    }
  }
}

int OracleModel::env_dim() const {
  int d = 1;
  for (const auto& m : modes) d *= m.fock_dim;
  return d;
}

int OracleModel::fock_dim_for(InverseTemperature beta, double Omega) {
  beta.validate();
  if (beta.is_infinite()) return 2;
  // truncated tail sum_{n>=d} p_n = e^{-d beta Omega}
  const int d = static_cast<int>(std::ceil(std::log(1e8) / (beta.beta * Omega))) + 1;
  return std::max(2, d);
}

bath::DiscreteBath OracleModel::discrete_bath() const {
  validate();
  bath::DiscreteBath b;
  b.beta = beta;
  auto add = [&](double omega, const Matrix2cd& w) {
    for (auto& line : b.lines)
      if (std::abs(line.omega - omega) <= 1e-9 * std::max(1.0, std::abs(omega))) {
        line.weight += w;
        return;
      }
    b.lines.push_back({omega, w});
  };
  for (const auto& m : modes) {
    Matrix2cd gg;
    gg << m.g_A * m.g_A, m.g_A * m.g_B, m.g_B * m.g_A, m.g_B * m.g_B;
    const double n = bath::bose_occupation(beta, m.Omega);
    add(m.Omega, 2.0 * pi * (n + 1.0) * gg);
    if (n > 0.0) add(-m.Omega, 2.0 * pi * n * gg);
  }
  b.validate();
  return b;
}

MatrixXcd thermal_env_state(const OracleModel& model) {
  model.validate();
  MatrixXcd rho = MatrixXcd::Identity(1, 1);
  for (const auto& m : model.modes) {
    VectorXd p = VectorXd::Zero(m.fock_dim);
    if (model.beta.is_infinite()) {
      p(0) = 1.0;
    } else {
      for (int n = 0; n < m.fock_dim; ++n)
        p(n) = std::exp(-model.beta.beta * m.Omega * n);
      p /= p.sum();
    }
    rho = kronx(rho, p.cast<complexd>().asDiagonal());
  }
  return rho;
}

double first_order_check(const OracleModel& model, const MatrixXcd& env_state) {
  const MatrixXcd oa = displacement_op(model, ops::Site::A);
  const MatrixXcd ob = displacement_op(model, ops::Site::B);
  return std::abs((env_state * oa).trace()) + std::abs((env_state * ob).trace());
}

double first_order_check(const OracleModel& model) {
  return first_order_check(model, thermal_env_state(model));
}

Matrix4cd partial_trace_env(const MatrixXcd& rho_full, int env_dim) {
  if (rho_full.rows() != 4 * env_dim || rho_full.cols() != 4 * env_dim)
    throw std::invalid_argument("partial trace dimension mismatch");
  Matrix4cd out = Matrix4cd::Zero();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int e = 0; e < env_dim; ++e)
        out(i, j) += rho_full(i * env_dim + e, j * env_dim + e);
  return out;
}

Matrix4cd exact_reduced_evolution(const OracleModel& model, const Matrix4cd& rho0,
                                  double t) {
  model.validate();
  dynamics::validate_state(rho0);
  const int D = model.env_dim();
  const MatrixXcd idD = MatrixXcd::Identity(D, D);
  MatrixXcd H = kronx(two_qubit_hamiltonian(model.qp.omega0), idD);
  MatrixXcd henv = MatrixXcd::Zero(D, D);
  for (size_t n = 0; n < model.modes.size(); ++n) {
    const MatrixXcd a = ladder(model.modes[n].fock_dim);
    henv += model.modes[n].Omega *
            embed(model, static_cast<int>(n), (a.adjoint() * a).eval());
  }
  H += kronx(Matrix4cd::Identity(), henv);
  for (ops::Site site : ops::sites)
    H += model.qp.lambda *
         kronx(ops::on_site(ops::sigma_x(), site), displacement_op(model, site));

  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(H);
  const MatrixXcd& V = es.eigenvectors();
  Eigen::VectorXcd phase(es.eigenvalues().size());
  for (int k = 0; k < phase.size(); ++k)
    phase(k) = std::polar(1.0, -es.eigenvalues()(k) * t);
  const MatrixXcd U = V * phase.asDiagonal() * V.adjoint();

  const MatrixXcd rho_full = kronx(rho0, thermal_env_state(model));
  const Matrix4cd reduced = partial_trace_env(U * rho_full * U.adjoint(), D);

  Matrix4cd rot = Matrix4cd::Identity();
  rot(0, 0) = std::polar(1.0, -model.qp.omega0 * t);
  rot(3, 3) = std::polar(1.0, +model.qp.omega0 * t);
  return rot * reduced * rot.adjoint();
}

Matrix4cd perturbative_direct(const CorrelationFn& corr, const QubitParams& qp,
                              const Matrix4cd& rho0, double t) {
  qp.validate();
  if (t < 0.0) throw std::domain_error("time must be non-negative");
  if (t == 0.0) return Matrix4cd::Zero();
  Matrix4cd prev = second_order_pass(corr, qp, rho0, t, 4);
  for (int panels = 8; panels <= 256; panels *= 2) {
    const Matrix4cd cur = second_order_pass(corr, qp, rho0, t, panels);
    if ((cur - prev).cwiseAbs().maxCoeff() < 1e-10) return cur;
    prev = cur;
  }
  throw numerical_error("second-order quadrature did not converge");
}

ConvergenceTable convergence_compare(const OracleModel& model, const Matrix4cd& rho0,
                                     double t, const std::vector<double>& lambdas) {
  model.validate();
  dynamics::validate_state(rho0);
  if (lambdas.size() < 3)
    throw std::invalid_argument("need at least 3 lambda values");
  const bath::DiscreteBath b = model.discrete_bath();
  ConvergenceTable table;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int nfit = 0;
  for (double lambda : lambdas) {
    OracleModel m = model;
    m.qp.lambda = lambda;
    const Matrix4cd exact = exact_reduced_evolution(m, rho0, t);
    const Matrix4cd delta = discrete::delta_rho2_discrete(b, m.qp, rho0, t);
    const double err = (exact - (rho0 + delta)).norm();
    if ((exact - rho0).norm() >= 0.1) table.regime_warning = true;
    table.rows.push_back({lambda, err});
    if (lambda > 0.0 && err > 0.0) {
      const double x = std::log(lambda), y = std::log(err);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++nfit;
    }
  }
  if (nfit >= 2) {
    const double denom = nfit * sxx - sx * sx;
    table.slope = (nfit * sxy - sx * sy) / denom;
  }
  return table;
}

}  // namespace decobound::oracle
