#pragma once

#include <doctest.h>

#include <cstdint>

#include "qcorr/matrix.hpp"
#include "qcorr/rng.hpp"

namespace testutil {

inline qcorr::Mat random_ginibre(std::uint64_t seed, int rows, int cols) {
  qcorr::Rng rng(seed);
  qcorr::Mat g(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      g(i, j) = qcorr::Complex(rng.gaussian(), rng.gaussian());
    }
  }
  return g;
}

inline qcorr::Mat random_unitary(std::uint64_t seed, int d) {
  const qcorr::Mat g = random_ginibre(seed, d, d);
  Eigen::HouseholderQR<qcorr::Mat> qr(g);
  return qr.householderQ();
}

inline void check_matrix_near(const qcorr::Mat& a, const qcorr::Mat& b, double tol) {
  REQUIRE(a.rows() == b.rows());
  REQUIRE(a.cols() == b.cols());
  CHECK((a - b).cwiseAbs().maxCoeff() <= tol);
}

inline qcorr::Mat basis_projector(int d, int i) {
  qcorr::Mat p = qcorr::Mat::Zero(d, d);
  p(i, i) = 1.0;
  return p;
}

}  // namespace testutil
