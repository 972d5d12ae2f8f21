#include "qcorr/states.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "qcorr/rng.hpp"

namespace qcorr {

namespace {

Eigen::Vector4cd ket01_plus_10() {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = 1.0 / std::sqrt(2.0);
  return v;
}

Eigen::Vector4cd ket01_minus_10() {
  Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

}  // namespace

DensityMatrix make_density(Mat m, int dim_a, int dim_b) {
  if (dim_a < 1 || dim_b < 1) {
    throw InvalidInput("density matrix: subsystem dimensions must be positive");
  }
  const Eigen::Index d = static_cast<Eigen::Index>(dim_a) * dim_b;
  if (d > kMaxDim) {
    throw InvalidInput("density matrix: dimension exceeds cap of 64");
  }
  if (m.rows() != d || m.cols() != d) {
    throw InvalidInput("density matrix: matrix is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + " but dims give " + std::to_string(d));
  }
  if (!all_finite(m)) {
    throw InvalidInput("density matrix invariant violated: non-finite entries");
  }
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > kHermitianTol) {
    throw InvalidInput("density matrix invariant violated: not Hermitian (deviation " +
                       std::to_string(herm_dev) + " > 1e-10)");
  }
  const double trace_dev = std::abs(m.trace() - Complex(1.0, 0.0));
  if (trace_dev > kHermitianTol) {
    throw InvalidInput("density matrix invariant violated: trace differs from 1 by " +
                       std::to_string(trace_dev));
  }
  const HermitianEig eig = hermitian_eig(m);
  const double min_eig = eig.eigenvalues.minCoeff();
  if (min_eig < kEigenvalueFloor) {
    throw InvalidInput("density matrix invariant violated: eigenvalue " +
                       std::to_string(min_eig) + " below -1e-9 (not positive semidefinite)");
  }
  return DensityMatrix{std::move(m), dim_a, dim_b};
}

DensityMatrix mixed_bell(double a) {
  if (!(a >= 0.0 && a <= 1.0)) {
    throw InvalidInput("mixed_bell: parameter a must lie in [0, 1]");
  }
  const Eigen::Vector4cd psi = ket01_plus_10();
  Mat rho = a * (psi * psi.adjoint());
  rho(3, 3) += 1.0 - a;
  return make_density(std::move(rho), 2, 2);
}

DensityMatrix werner(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidInput("werner: parameter p must lie in [0, 1]");
  }
  const Eigen::Vector4cd psi = ket01_minus_10();
  Mat rho = p * (psi * psi.adjoint());
  rho += (1.0 - p) * 0.25 * Mat::Identity(4, 4);
  return make_density(std::move(rho), 2, 2);
}

DensityMatrix random_density(std::uint64_t seed, int d, int rank) {
  if (d < 1 || d > kMaxDim) {
    throw InvalidInput("random_density: dimension out of range");
  }
  if (rank < 1 || rank > d) {
    throw InvalidInput("random_density: rank must lie in [1, d]");
  }
  Rng rng(seed);
  Mat g(d, rank);
  const double scale = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < rank; ++j) {
      g(i, j) = Complex(rng.gaussian(), rng.gaussian()) * scale;
    }
  }
  Mat rho = g * g.adjoint();
  rho /= rho.trace().real();
  // exact symmetrization so validation never trips on rounding
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return make_density(std::move(rho), d, 1);
}

DensityMatrix random_two_qubit(std::uint64_t seed, int rank) {
  DensityMatrix rho = random_density(seed, 4, rank);
  rho.dim_a = 2;
  rho.dim_b = 2;
  return rho;
}

DensityMatrix reduced_state(const DensityMatrix& rho, Subsystem keep) {
  Mat reduced = partial_trace(rho.matrix, rho.dim_a, rho.dim_b, keep);
  const int d = static_cast<int>(reduced.rows());
  return make_density(std::move(reduced), d, 1);
}

DensityMatrix swap_subsystems(const DensityMatrix& rho) {
  const int da = rho.dim_a;
  const int db = rho.dim_b;
  Mat out(rho.dim(), rho.dim());
  for (int a1 = 0; a1 < da; ++a1) {
    for (int b1 = 0; b1 < db; ++b1) {
      for (int a2 = 0; a2 < da; ++a2) {
        for (int b2 = 0; b2 < db; ++b2) {
          out(b1 * da + a1, b2 * da + a2) = rho.matrix(a1 * db + b1, a2 * db + b2);
        }
      }
    }
  }
  return make_density(std::move(out), db, da);
}

double purity(const DensityMatrix& rho) {
  return (rho.matrix * rho.matrix).trace().real();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    parts.push_back(item);
  }
  return parts;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("could not parse " + what + " from '" + s + "'");
  }
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InvalidInput("could not parse " + what + " from '" + s + "'");
  }
}

}  // namespace

DensityMatrix parse_state_literal(const std::string& literal) {
  const auto colon = literal.find(':');
  const std::string kind = literal.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : literal.substr(colon + 1);
  if (kind == "mixed-bell") {
    return mixed_bell(parse_double(rest, "mixed-bell parameter"));
  }
  if (kind == "werner") {
    return werner(parse_double(rest, "werner parameter"));
  }
  if (kind == "random") {
    const auto parts = split(rest, ':');
    if (parts.size() != 3) {
      throw InvalidInput("random literal must be random:<seed>:<d>:<rank>");
    }
    const long seed = parse_long(parts[0], "seed");
    const long d = parse_long(parts[1], "dimension");
    const long rank = parse_long(parts[2], "rank");
    DensityMatrix rho = random_density(static_cast<std::uint64_t>(seed),
                                       static_cast<int>(d), static_cast<int>(rank));
    if (d == 4) {
      rho.dim_a = 2;
      rho.dim_b = 2;
    }
    return rho;
  }
  if (kind == "file") {
    return load_state_file(rest);
  }
  throw InvalidInput("unknown state literal '" + literal +
                     "' (expected mixed-bell:<a>, werner:<p>, random:<seed>:<d>:<rank> "
                     "or file:<path>)");
}

DensityMatrix load_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open state file '" + path + "'");
  }
  int dim_a = 0;
  int dim_b = 0;
  if (!(in >> dim_a >> dim_b)) {
    throw InvalidInput("state file '" + path + "': first line must be 'd_A d_B'");
  }
  if (dim_a < 1 || dim_b < 1 || static_cast<long>(dim_a) * dim_b > kMaxDim) {
    throw InvalidInput("state file '" + path + "': bad dimensions");
  }
  const int d = dim_a * dim_b;
  Mat m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      double re = 0.0;
      double im = 0.0;
      if (!(in >> re >> im)) {
        throw InvalidInput("state file '" + path + "': expected " + std::to_string(d * d) +
                           " 're im' lines in row-major order");
      }
      m(i, j) = Complex(re, im);
    }
  }
  return make_density(std::move(m), dim_a, dim_b);
}

}  // namespace qcorr
