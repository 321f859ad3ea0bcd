#include "decobound/ops.hpp"

namespace decobound::ops {

namespace {
const complexd i1(0.0, 1.0);
}

Matrix2cd id2() { return Matrix2cd::Identity(); }

Matrix2cd sigma_x() {
  Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Matrix2cd sigma_y() {
  Matrix2cd m;
  m << 0, -i1, i1, 0;
  return m;
}

Matrix2cd sigma_z() {
  Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Matrix2cd sigma(Sign s) {
  Matrix2cd m = Matrix2cd::Zero();
  if (s == Sign::plus)
    m(0, 1) = 1.0;  // |0><1|: lowers the energy of -(omega0/2) sigma_z
  else
    m(1, 0) = 1.0;
  return m;
}

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b) {
  Matrix4cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return m;
}

Matrix4cd on_site(const Matrix2cd& op, Site site) {
  return site == Site::A ? kron(op, id2()) : kron(id2(), op);
}

Matrix4cd sigma(Sign s, Site site) { return on_site(sigma(s), site); }

Vector4cd basis_state(int a, int b) {
  Vector4cd v = Vector4cd::Zero();
  v(2 * a + b) = 1.0;
  return v;
}

Vector4cd singlet() {
  return (basis_state(0, 1) - basis_state(1, 0)) / std::sqrt(2.0);
}

Vector4cd triplet_zero() {
  return (basis_state(0, 1) + basis_state(1, 0)) / std::sqrt(2.0);
}

Vector4cd bell_phi_plus() {
  return (basis_state(0, 0) + basis_state(1, 1)) / std::sqrt(2.0);
}

Vector16cd vec(const Matrix4cd& m) {
  Vector16cd v;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) v(4 * col + row) = m(row, col);
  return v;
}

Matrix4cd unvec(const Vector16cd& v) {
  Matrix4cd m;
  for (int col = 0; col < 4; ++col)
    for (int row = 0; row < 4; ++row) m(row, col) = v(4 * col + row);
  return m;
}

Matrix16cd kron16(const Matrix4cd& a, const Matrix4cd& b) {
  Matrix16cd m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m.block<4, 4>(4 * i, 4 * j) = a(i, j) * b;
  return m;
}

bool is_hermitian(const Eigen::MatrixXcd& m, double tol) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue(const Eigen::MatrixXcd& hermitian) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(hermitian);
  return es.eigenvalues().minCoeff();
}

}  // namespace decobound::ops
