#pragma once

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

// Dense complex matrix algebra and entropy primitives for small Hilbert
// spaces (dimension <= 64). All entropies are in bits (log base 2).

namespace qcorr {

using Complex = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using RealVec = Eigen::VectorXd;

inline constexpr int kMaxDim = 64;
inline constexpr double kHermitianTol = 1e-10;
// Eigenvalues in [kEigenvalueFloor, 0) are treated as numerical zero;
// anything below is a genuinely invalid state.
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kProbClipTol = 1e-10;

// Bad caller input: out-of-range parameters, dimension mismatches,
// violated state invariants. Maps to CLI exit code 2.
struct InvalidInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Internal numeric failure (solver breakdown, NaN mid-computation).
// Maps to CLI exit code 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Subsystem { A, B };

bool all_finite(const Mat& m);

// Kronecker product, row-major block structure a(i,j) * b.
Mat tensor_product(const Mat& a, const Mat& b);

// Reduced state of one subsystem of a (dim_a * dim_b)-dimensional operator.
// Index convention: row = a * dim_b + b.
Mat partial_trace(const Mat& rho, int dim_a, int dim_b, Subsystem keep);

struct HermitianEig {
  RealVec eigenvalues;  // ascending
  Mat eigenvectors;     // unitary, columns aligned with eigenvalues
};

// Symmetrizes (m + m^dagger)/2 and diagonalizes. Throws InvalidInput if the
// input deviates from Hermitian by more than kHermitianTol, NumericError on
// solver failure. Deterministic for identical inputs.
HermitianEig hermitian_eig(const Mat& m);

// Validates and clips a probability vector: entries within
// [-kProbClipTol, 1 + kProbClipTol] are clipped to [0, 1]; the clipped sum
// must be 1 within 1e-9.
std::vector<double> make_probability_vector(std::span<const double> values);

// -sum p log2 p with 0 log 0 = 0. Assumes entries already in [0, 1].
double shannon_entropy(std::span<const double> p);

double binary_entropy(double p);

// -sum lambda log2 lambda over the spectrum. Eigenvalues within the clip
// window are zeroed and the spectrum is renormalized; below the floor the
// state is rejected.
double von_neumann_entropy(const Mat& rho);

// S(A|B) = S(AB) - S(B).
double conditional_vn_entropy(const Mat& rho_ab, int dim_a, int dim_b);

}  // namespace qcorr
