#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcorr/matrix.hpp"
#include "qcorr/states.hpp"
#include "test_helpers.hpp"

using namespace qcorr;
using testutil::check_matrix_near;

namespace {

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat bell_psi_plus() {
  Eigen::Vector4cd v;
  v << 0, 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0), 0;
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("tensor product basics") {
  check_matrix_near(tensor_product(Mat::Identity(2, 2), Mat::Identity(2, 2)),
                    Mat::Identity(4, 4), 0.0);

  const Mat p01 = tensor_product(testutil::basis_projector(2, 0), testutil::basis_projector(2, 1));
  Mat expected = Mat::Zero(4, 4);
  expected(1, 1) = 1.0;
  check_matrix_near(p01, expected, 0.0);

  Mat zz = Mat::Zero(4, 4);
  zz(0, 0) = 1;
  zz(1, 1) = -1;
  zz(2, 2) = -1;
  zz(3, 3) = 1;
  check_matrix_near(tensor_product(pauli_z(), pauli_z()), zz, 0.0);
}

TEST_CASE("partial trace basics") {
  check_matrix_near(partial_trace(bell_psi_plus(), 2, 2, Subsystem::A),
                    0.5 * Mat::Identity(2, 2), 1e-15);

  const Mat rho = random_density(11, 2, 2).matrix;
  const Mat sigma = random_density(12, 3, 3).matrix;
  const Mat joint = tensor_product(rho, sigma);
  check_matrix_near(partial_trace(joint, 2, 3, Subsystem::A), rho, 1e-12);
  check_matrix_near(partial_trace(joint, 2, 3, Subsystem::B), sigma, 1e-12);

  const Mat reduced = partial_trace(mixed_bell(0.01).matrix, 2, 2, Subsystem::A);
  Mat diag = Mat::Zero(2, 2);
  diag(0, 0) = 0.005;
  diag(1, 1) = 0.995;
  check_matrix_near(reduced, diag, 1e-15);

  CHECK_THROWS_AS(partial_trace(Mat::Identity(4, 4), 3, 2, Subsystem::A), InvalidInput);
}

TEST_CASE("partial trace preserves trace") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const Mat rho = random_density(seed, 6, 6).matrix;
    CHECK(partial_trace(rho, 2, 3, Subsystem::A).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(partial_trace(rho, 3, 2, Subsystem::B).trace().real() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("hermitian eigendecomposition") {
  const HermitianEig id = hermitian_eig(Mat::Identity(2, 2));
  CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(id.eigenvalues(1) == doctest::Approx(1.0));

  const HermitianEig sx = hermitian_eig(pauli_x());
  CHECK(sx.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(sx.eigenvalues(1) == doctest::Approx(1.0));

  const HermitianEig mb = hermitian_eig(mixed_bell(0.01).matrix);
  CHECK(mb.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mb.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mb.eigenvalues(2) == doctest::Approx(0.01));
  CHECK(mb.eigenvalues(3) == doctest::Approx(0.99));
}

TEST_CASE("eigendecomposition reconstructs and is unitary") {
  for (std::uint64_t seed : {5u, 6u, 7u, 8u}) {
    Mat g = testutil::random_ginibre(seed, 5, 5);
    const Mat herm = 0.5 * (g + g.adjoint());
    const HermitianEig eig = hermitian_eig(herm);
    const Mat rebuilt =
        eig.eigenvectors * eig.eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
        eig.eigenvectors.adjoint();
    check_matrix_near(rebuilt, herm, 1e-10);
    check_matrix_near(eig.eigenvectors.adjoint() * eig.eigenvectors, Mat::Identity(5, 5), 1e-10);
  }
}

TEST_CASE("hermitian_eig rejects non-Hermitian input") {
  Mat bad(2, 2);
  bad << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eig(bad), InvalidInput);
  CHECK_THROWS_AS(hermitian_eig(Mat::Identity(2, 3)), InvalidInput);
}

TEST_CASE("hermitian_eig is deterministic") {
  const Mat rho = random_density(99, 4, 4).matrix;
  const HermitianEig a = hermitian_eig(rho);
  const HermitianEig b = hermitian_eig(rho);
  CHECK((a.eigenvalues - b.eigenvalues).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a.eigenvectors - b.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("shannon entropy") {
  const std::vector<double> uniform = {0.5, 0.5};
  CHECK(shannon_entropy(uniform) == doctest::Approx(1.0));
  const std::vector<double> point = {1.0, 0.0};
  CHECK(shannon_entropy(point) == doctest::Approx(0.0));
  // same spectrum as the reduced mixed Bell state at a = 0.01
  const std::vector<double> p = {0.005, 0.995};
  CHECK(shannon_entropy(p) == doctest::Approx(0.0454).epsilon(0.011));
  CHECK(shannon_entropy(p) == doctest::Approx(0.045414692334).epsilon(1e-10));
}

TEST_CASE("probability vector validation") {
  const std::vector<double> drifted = {1.0 + 5e-11, -5e-11};
  const std::vector<double> cleaned = make_probability_vector(drifted);
  CHECK(cleaned[0] == 1.0);
  CHECK(cleaned[1] == 0.0);

  const std::vector<double> negative = {1.2, -0.2};
  CHECK_THROWS_AS(make_probability_vector(negative), InvalidInput);
  const std::vector<double> short_sum = {0.5, 0.4};
  CHECK_THROWS_AS(make_probability_vector(short_sum), InvalidInput);
}

TEST_CASE("von Neumann entropy basics") {
  CHECK(von_neumann_entropy(0.5 * Mat::Identity(2, 2)) == doctest::Approx(1.0));
  CHECK(von_neumann_entropy(bell_psi_plus()) == doctest::Approx(0.0).epsilon(1e-12));
  const Mat reduced = partial_trace(mixed_bell(0.01).matrix, 2, 2, Subsystem::A);
  CHECK(von_neumann_entropy(reduced) == doctest::Approx(0.0454).epsilon(0.011));
  CHECK(von_neumann_entropy(reduced) == doctest::Approx(binary_entropy(0.005)).epsilon(1e-12));

  Mat not_a_state = Mat::Identity(2, 2);
  not_a_state(0, 0) = 1.5;
  not_a_state(1, 1) = -0.5;
  CHECK_THROWS_AS(von_neumann_entropy(not_a_state), InvalidInput);
}

TEST_CASE("conditional entropy") {
  CHECK(conditional_vn_entropy(bell_psi_plus(), 2, 2) == doctest::Approx(-1.0));
  const Mat rho = random_density(21, 2, 2).matrix;
  const Mat sigma = random_density(22, 2, 2).matrix;
  CHECK(conditional_vn_entropy(tensor_product(rho, sigma), 2, 2) ==
        doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-10));
  CHECK(conditional_vn_entropy(mixed_bell(0.01).matrix, 2, 2) ==
        doctest::Approx(0.0354).epsilon(0.015));
  CHECK(conditional_vn_entropy(mixed_bell(0.01).matrix, 2, 2) ==
        doctest::Approx(0.035378443562).epsilon(1e-9));
}

TEST_CASE("entropy bounds and subadditivity on random states") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const DensityMatrix rho = random_two_qubit(seed, 1 + static_cast<int>(seed % 4));
    const double s_ab = von_neumann_entropy(rho.matrix);
    const double s_a = von_neumann_entropy(partial_trace(rho.matrix, 2, 2, Subsystem::A));
    const double s_b = von_neumann_entropy(partial_trace(rho.matrix, 2, 2, Subsystem::B));
    CHECK(s_ab >= -1e-9);
    CHECK(s_ab <= 2.0 + 1e-9);
    CHECK(s_a <= 1.0 + 1e-9);
    CHECK(s_ab <= s_a + s_b + 1e-9);                 // subadditivity
    CHECK(std::abs(s_a - s_b) <= s_ab + 1e-9);       // Araki-Lieb
  }
}

TEST_CASE("entropy is basis invariant") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Mat rho = random_density(seed + 40, 4, 3).matrix;
    const Mat u = testutil::random_unitary(seed + 140, 4);
    const Mat rotated = u * rho * u.adjoint();
    CHECK(von_neumann_entropy(rotated) ==
          doctest::Approx(von_neumann_entropy(rho)).epsilon(1e-9));
  }
}

TEST_CASE("mixed Bell family has binary joint entropy") {
  for (double a : {0.0, 0.01, 0.3, 0.5, 0.77, 1.0}) {
    CHECK(von_neumann_entropy(mixed_bell(a).matrix) ==
          doctest::Approx(binary_entropy(a)).epsilon(1e-9));
  }
}
