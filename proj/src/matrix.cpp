#include "qcorr/matrix.hpp"

#include <cmath>

#include <unsupported/Eigen/KroneckerProduct>

namespace qcorr {

bool all_finite(const Mat& m) {
  return m.allFinite();
}

Mat tensor_product(const Mat& a, const Mat& b) {
  if (!all_finite(a) || !all_finite(b)) {
    throw InvalidInput("tensor_product: non-finite entries");
  }
  return Eigen::kroneckerProduct(a, b);
}

Mat partial_trace(const Mat& rho, int dim_a, int dim_b, Subsystem keep) {
  if (dim_a < 1 || dim_b < 1 || rho.rows() != rho.cols() ||
      rho.rows() != static_cast<Eigen::Index>(dim_a) * dim_b) {
    throw InvalidInput("partial_trace: dimension mismatch");
  }
  if (keep == Subsystem::A) {
    Mat out = Mat::Zero(dim_a, dim_a);
    for (int i = 0; i < dim_a; ++i) {
      for (int j = 0; j < dim_a; ++j) {
        Complex sum = 0.0;
        for (int b = 0; b < dim_b; ++b) {
          sum += rho(i * dim_b + b, j * dim_b + b);
        }
        out(i, j) = sum;
      }
    }
    return out;
  }
  Mat out = Mat::Zero(dim_b, dim_b);
  for (int i = 0; i < dim_b; ++i) {
    for (int j = 0; j < dim_b; ++j) {
      Complex sum = 0.0;
      for (int a = 0; a < dim_a; ++a) {
        sum += rho(a * dim_b + i, a * dim_b + j);
      }
      out(i, j) = sum;
    }
  }
  return out;
}

HermitianEig hermitian_eig(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw InvalidInput("hermitian_eig: matrix not square");
  }
  if (!all_finite(m)) {
    throw InvalidInput("hermitian_eig: non-finite entries");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw InvalidInput("hermitian_eig: input deviates from Hermitian by " +
                       std::to_string(herm_dev));
  }
  const Mat sym = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> solver(sym);
  if (solver.info() != Eigen::Success) {
    throw NumericError("hermitian_eig: eigensolver failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

std::vector<double> make_probability_vector(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < -kProbClipTol || v > 1.0 + kProbClipTol) {
      throw InvalidInput("probability vector: entry " + std::to_string(v) +
                         " outside [0, 1] tolerance");
    }
    const double clipped = std::min(1.0, std::max(0.0, v));
    out.push_back(clipped);
    sum += clipped;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw InvalidInput("probability vector: sum " + std::to_string(sum) +
                       " differs from 1 beyond 1e-9");
  }
  return out;
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double v : p) {
    if (v > 0.0) {
      h -= v * std::log2(v);
    }
  }
  return h;
}

double binary_entropy(double p) {
  p = std::min(1.0, std::max(0.0, p));
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

double von_neumann_entropy(const Mat& rho) {
  const HermitianEig eig = hermitian_eig(rho);
  double sum = 0.0;
  std::vector<double> spectrum;
  spectrum.reserve(static_cast<std::size_t>(eig.eigenvalues.size()));
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    double lambda = eig.eigenvalues[i];
    if (lambda < kEigenvalueFloor) {
      throw InvalidInput("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                         " below " + std::to_string(kEigenvalueFloor) +
                         " (not positive semidefinite)");
    }
    lambda = std::max(0.0, lambda);
    spectrum.push_back(lambda);
    sum += lambda;
  }
  if (sum <= 0.0) {
    throw NumericError("von_neumann_entropy: zero spectrum");
  }
  double h = 0.0;
  for (double lambda : spectrum) {
    const double p = lambda / sum;
    if (p > 0.0) {
      h -= p * std::log2(p);
    }
  }
  return h;
}

double conditional_vn_entropy(const Mat& rho_ab, int dim_a, int dim_b) {
  const double s_ab = von_neumann_entropy(rho_ab);
  const double s_b = von_neumann_entropy(partial_trace(rho_ab, dim_a, dim_b, Subsystem::B));
  return s_ab - s_b;
}

}  // namespace qcorr
