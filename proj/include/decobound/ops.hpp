// ops.hpp -- fixed operators and small helpers on the two-qubit space.
//
// Basis ordering |00>, |01>, |10>, |11> with qubit A the left tensor factor.
// |0> is the sigma_z = +1 ground state of -(omega0/2) sigma_z, so sigma_plus
// = |0><1| lowers the energy by omega0.
#pragma once

#include <Eigen/Dense>

#include "decobound/types.hpp"

namespace decobound::ops {

using Eigen::Matrix2cd;
using Eigen::Matrix4cd;
using Eigen::Vector4cd;
using Vector16cd = Eigen::Vector<complexd, 16>;
using Matrix16cd = Eigen::Matrix<complexd, 16, 16>;

enum class Site : int { A = 0, B = 1 };
inline constexpr Site sites[2] = {Site::A, Site::B};

Matrix2cd id2();
Matrix2cd sigma_x();
Matrix2cd sigma_y();
Matrix2cd sigma_z();
Matrix2cd sigma(Sign s);  // sigma_+ = |0><1|, sigma_- = |1><0|

Matrix4cd kron(const Matrix2cd& a, const Matrix2cd& b);  // a acts on qubit A
Matrix4cd on_site(const Matrix2cd& op, Site site);
Matrix4cd sigma(Sign s, Site site);

Vector4cd basis_state(int a, int b);   // |ab>
Vector4cd singlet();                   // (|01> - |10>)/sqrt(2)
Vector4cd triplet_zero();              // (|01> + |10>)/sqrt(2)
Vector4cd bell_phi_plus();             // (|00> + |11>)/sqrt(2)

// Column-stacking convention: vec(A rho B) = (B^T kron A) vec(rho).
Vector16cd vec(const Matrix4cd& m);
Matrix4cd unvec(const Vector16cd& v);
Matrix16cd kron16(const Matrix4cd& a, const Matrix4cd& b);

bool is_hermitian(const Eigen::MatrixXcd& m, double tol);
double min_eigenvalue(const Eigen::MatrixXcd& hermitian);

}  // namespace decobound::ops
