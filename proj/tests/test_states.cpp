#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qcorr/matrix.hpp"
#include "qcorr/states.hpp"
#include "test_helpers.hpp"

using namespace qcorr;
using testutil::check_matrix_near;

TEST_CASE("mixed Bell endpoints and spectrum") {
  const DensityMatrix pure = mixed_bell(1.0);
  CHECK(purity(pure) == doctest::Approx(1.0).epsilon(1e-12));
  Eigen::Vector4cd psi;
  psi << 0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0;
  check_matrix_near(pure.matrix, psi * psi.adjoint(), 1e-15);

  const DensityMatrix bottom = mixed_bell(0.0);
  check_matrix_near(bottom.matrix, testutil::basis_projector(4, 3), 1e-15);

  const HermitianEig eig = hermitian_eig(mixed_bell(0.01).matrix);
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(1) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(eig.eigenvalues(2) == doctest::Approx(0.01));
  CHECK(eig.eigenvalues(3) == doctest::Approx(0.99));

  CHECK_THROWS_AS(mixed_bell(-0.1), InvalidInput);
  CHECK_THROWS_AS(mixed_bell(1.1), InvalidInput);
}

TEST_CASE("mixed Bell reduced states") {
  for (double a : {0.01, 0.4, 0.9}) {
    const DensityMatrix rho = mixed_bell(a);
    Mat expected = Mat::Zero(2, 2);
    expected(0, 0) = a / 2.0;
    expected(1, 1) = 1.0 - a / 2.0;
    check_matrix_near(reduced_state(rho, Subsystem::A).matrix, expected, 1e-12);
    check_matrix_near(reduced_state(rho, Subsystem::B).matrix, expected, 1e-12);
  }
}

TEST_CASE("werner endpoints and spectrum") {
  check_matrix_near(werner(0.0).matrix, 0.25 * Mat::Identity(4, 4), 1e-15);

  Eigen::Vector4cd singlet;
  singlet << 0, 1 / std::sqrt(2.0), -1 / std::sqrt(2.0), 0;
  check_matrix_near(werner(1.0).matrix, singlet * singlet.adjoint(), 1e-15);

  const HermitianEig eig = hermitian_eig(werner(0.5).matrix);
  CHECK(eig.eigenvalues(0) == doctest::Approx(0.125));
  CHECK(eig.eigenvalues(1) == doctest::Approx(0.125));
  CHECK(eig.eigenvalues(2) == doctest::Approx(0.125));
  CHECK(eig.eigenvalues(3) == doctest::Approx(0.625));

  for (double p : {0.0, 0.3, 1.0}) {
    check_matrix_near(reduced_state(werner(p), Subsystem::A).matrix, 0.5 * Mat::Identity(2, 2),
                      1e-12);
    check_matrix_near(reduced_state(werner(p), Subsystem::B).matrix, 0.5 * Mat::Identity(2, 2),
                      1e-12);
  }

  CHECK_THROWS_AS(werner(-0.01), InvalidInput);
  CHECK_THROWS_AS(werner(1.01), InvalidInput);
}

TEST_CASE("random density determinism and rank") {
  const DensityMatrix a = random_density(1234, 4, 4);
  const DensityMatrix b = random_density(1234, 4, 4);
  CHECK((a.matrix - b.matrix).cwiseAbs().maxCoeff() == 0.0);
  const DensityMatrix c = random_density(1235, 4, 4);
  CHECK((a.matrix - c.matrix).cwiseAbs().maxCoeff() > 1e-3);

  CHECK(purity(random_density(7, 4, 1)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(purity(random_density(7, 4, 4)) < 1.0 - 1e-3);

  CHECK_THROWS_AS(random_density(0, 4, 0), InvalidInput);
  CHECK_THROWS_AS(random_density(0, 4, 5), InvalidInput);
}

TEST_CASE("constructed states satisfy all invariants") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const DensityMatrix rho = random_density(seed, 2 + static_cast<int>(seed % 5),
                                             1 + static_cast<int>(seed % 3));
    CHECK(rho.matrix.trace().real() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK((rho.matrix - rho.matrix.adjoint()).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK(hermitian_eig(rho.matrix).eigenvalues.minCoeff() >= -1e-9);
  }
}

TEST_CASE("make_density rejects invalid inputs with named invariant") {
  Mat m = Mat::Identity(2, 2);  // trace 2
  CHECK_THROWS_WITH_AS(make_density(m, 2, 1), doctest::Contains("trace"), InvalidInput);

  Mat not_herm(2, 2);
  not_herm << 0.5, 0.5, -0.5, 0.5;
  CHECK_THROWS_WITH_AS(make_density(not_herm, 2, 1), doctest::Contains("Hermitian"),
                       InvalidInput);

  Mat not_psd(2, 2);
  not_psd << 1.5, 0, 0, -0.5;
  CHECK_THROWS_WITH_AS(make_density(not_psd, 2, 1), doctest::Contains("semidefinite"),
                       InvalidInput);

  CHECK_THROWS_AS(make_density(Mat::Identity(4, 4) * 0.25, 2, 1), InvalidInput);  // dims
  CHECK_THROWS_AS(make_density(Mat::Identity(128, 128) / 128.0, 128, 1), InvalidInput);
}

TEST_CASE("subsystem swap") {
  const Mat rho = random_density(31, 2, 2).matrix;
  const Mat sigma = random_density(32, 2, 2).matrix;
  DensityMatrix joint = make_density(tensor_product(rho, sigma), 2, 2);
  const DensityMatrix swapped = swap_subsystems(joint);
  check_matrix_near(swapped.matrix, tensor_product(sigma, rho), 1e-12);
  const DensityMatrix twice = swap_subsystems(swapped);
  check_matrix_near(twice.matrix, joint.matrix, 1e-12);

  // the mixed Bell family is exchange-symmetric
  check_matrix_near(swap_subsystems(mixed_bell(0.3)).matrix, mixed_bell(0.3).matrix, 1e-12);
}

TEST_CASE("state literals") {
  check_matrix_near(parse_state_literal("mixed-bell:0.25").matrix, mixed_bell(0.25).matrix, 0.0);
  check_matrix_near(parse_state_literal("werner:0.5").matrix, werner(0.5).matrix, 0.0);
  const DensityMatrix r = parse_state_literal("random:7:4:2");
  check_matrix_near(r.matrix, random_density(7, 4, 2).matrix, 0.0);
  CHECK(r.dim_a == 2);  // 4-dimensional random states default to the qubit split
  CHECK(r.dim_b == 2);

  CHECK_THROWS_AS(parse_state_literal("ghz:3"), InvalidInput);
  CHECK_THROWS_AS(parse_state_literal("mixed-bell:abc"), InvalidInput);
  CHECK_THROWS_AS(parse_state_literal("random:1:4"), InvalidInput);
}

TEST_CASE("state file round trip") {
  const DensityMatrix rho = random_two_qubit(77, 3);
  const std::string path = "qcorr_test_state.txt";
  {
    std::ofstream out(path);
    out << "2 2\n";
    out.precision(17);
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        out << rho.matrix(i, j).real() << " " << rho.matrix(i, j).imag() << "\n";
      }
    }
  }
  const DensityMatrix loaded = parse_state_literal("file:" + path);
  CHECK(loaded.dim_a == 2);
  CHECK(loaded.dim_b == 2);
  check_matrix_near(loaded.matrix, rho.matrix, 1e-15);
  std::remove(path.c_str());

  CHECK_THROWS_AS(load_state_file("definitely_missing_file.txt"), InvalidInput);
}

TEST_CASE("state file rejects invalid matrices") {
  const std::string path = "qcorr_test_bad_state.txt";
  {
    std::ofstream out(path);
    out << "2 1\n1.5 0\n0 0\n0 0\n-0.5 0\n";  // not PSD
  }
  CHECK_THROWS_WITH_AS(load_state_file(path), doctest::Contains("semidefinite"), InvalidInput);
  std::remove(path.c_str());
}
