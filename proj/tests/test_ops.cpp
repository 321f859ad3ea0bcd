#include <doctest.h>

#include <random>

#include "decobound/ops.hpp"
#include "oracles.hpp"

using namespace decobound;
using ops::Site;

TEST_SUITE_BEGIN("ops");

TEST_CASE("pauli algebra") {
  CHECK((ops::sigma_x() * ops::sigma_y() -
         complexd(0, 1) * ops::sigma_z()).norm() == doctest::Approx(0.0));
  CHECK((ops::sigma(Sign::plus) - (ops::sigma_x() + complexd(0, 1) * ops::sigma_y()) / 2.0)
            .norm() < 1e-15);
  // sigma_+ lowers |1> to |0> in this basis
  Eigen::Vector2cd e1(0.0, 1.0);
  Eigen::Vector2cd out = ops::sigma(Sign::plus) * e1;
  CHECK(std::abs(out(0) - 1.0) < 1e-15);
  CHECK(std::abs(out(1)) < 1e-15);
}

TEST_CASE("tensor ordering puts A on the left") {
  const Eigen::Matrix4cd za = ops::on_site(ops::sigma_z(), Site::A);
  const Eigen::Matrix4cd zb = ops::on_site(ops::sigma_z(), Site::B);
  CHECK(za(0, 0) == complexd(1.0));
  CHECK(za(1, 1) == complexd(1.0));   // |01>: A still up
  CHECK(za(2, 2) == complexd(-1.0));  // |10>: A flipped
  CHECK(zb(1, 1) == complexd(-1.0));
  CHECK(zb(2, 2) == complexd(1.0));
}

TEST_CASE("sigma_plus^A maps |10> to |00>") {
  const Eigen::Vector4cd out = ops::sigma(Sign::plus, Site::A) * ops::basis_state(1, 0);
  CHECK((out - ops::basis_state(0, 0)).norm() < 1e-15);
  const Eigen::Vector4cd out_b = ops::sigma(Sign::plus, Site::B) * ops::basis_state(0, 1);
  CHECK((out_b - ops::basis_state(0, 0)).norm() < 1e-15);
}

TEST_CASE("bell states normalized and orthogonal") {
  CHECK(ops::singlet().norm() == doctest::Approx(1.0));
  CHECK(ops::triplet_zero().norm() == doctest::Approx(1.0));
  CHECK(ops::bell_phi_plus().norm() == doctest::Approx(1.0));
  CHECK(std::abs(ops::singlet().dot(ops::triplet_zero())) < 1e-15);
}

TEST_CASE("vec unvec round trip and product identity") {
  std::mt19937_64 rng(11);
  const Eigen::Matrix4cd rho = testoracle::random_density(rng);
  CHECK((ops::unvec(ops::vec(rho)) - rho).norm() < 1e-15);

  std::normal_distribution<double> gauss;
  Eigen::Matrix4cd a, b;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a(i, j) = complexd(gauss(rng), gauss(rng));
      b(i, j) = complexd(gauss(rng), gauss(rng));
    }
  // vec(A rho B) = (B^T kron A) vec(rho)
  const ops::Vector16cd lhs = ops::vec(a * rho * b);
  const ops::Vector16cd rhs = ops::kron16(b.transpose(), a) * ops::vec(rho);
  CHECK((lhs - rhs).norm() < 1e-12);
}

TEST_CASE("hermiticity and spectrum helpers") {
  std::mt19937_64 rng(12);
  const Eigen::Matrix4cd rho = testoracle::random_density(rng);
  CHECK(ops::is_hermitian(rho, 1e-12));
  CHECK(ops::min_eigenvalue(rho) >= -1e-14);
  Eigen::Matrix4cd skew = rho;
  skew(0, 1) += complexd(0.0, 1e-6);
  CHECK(!ops::is_hermitian(skew, 1e-9));
}

TEST_SUITE_END();
