#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qcorr/matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

struct BlochAngles {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi)
};

// Complete set of orthogonal rank-1 projectors on one subsystem.
struct ProjectiveMeasurement {
  std::string label;
  std::vector<Mat> projectors;

  int dim() const {
    return projectors.empty() ? 0 : static_cast<int>(projectors.front().rows());
  }
};

// Validates idempotence, Hermiticity, mutual orthogonality and completeness
// (all within 1e-10).
ProjectiveMeasurement make_projective(std::string label, std::vector<Mat> projectors);

ProjectiveMeasurement measurement_z();
ProjectiveMeasurement measurement_x();
ProjectiveMeasurement measurement_y();

// Basis {cos(t/2)|0> + e^{i phi} sin(t/2)|1>, orthogonal complement}.
ProjectiveMeasurement projective_from_bloch(const BlochAngles& angles);

// The three standard qubit mutually unbiased bases [Z, X, Y].
std::vector<ProjectiveMeasurement> mub_qubit();

// Bloch axis of the first projector; angles of the corresponding basis.
BlochAngles bloch_angles_of(const ProjectiveMeasurement& m);

// p_j = tr(P_j rho). rho must live on the measurement's own space.
std::vector<double> outcome_distribution(const DensityMatrix& rho,
                                         const ProjectiveMeasurement& m);

// Outcome probabilities with the conditional post-measurement states of B.
struct OutcomeEnsemble {
  std::vector<double> probabilities;
  std::vector<Mat> conditional_states;
};

// Measures subsystem A of a bipartite state: p_j = tr[(P_j x I) rho],
// rho_B|j = tr_A[(P_j x I) rho (P_j x I)] / p_j. Outcomes with
// p_j < 1e-12 are dropped (their entropy weight is zero).
OutcomeEnsemble measure_on_A(const DensityMatrix& rho_ab,
                             const ProjectiveMeasurement& m);

// sum_j p_j S(rho_B|j) for the given measurement on A.
double average_conditional_entropy(const DensityMatrix& rho_ab,
                                   const ProjectiveMeasurement& m);

// Same quantity for the qubit basis at the given Bloch angles, computed by
// direct contraction (hot path for the measurement-angle optimizers).
double average_conditional_entropy(const DensityMatrix& rho_ab,
                                   const BlochAngles& angles);

// max_{i,j} |<r_i|s_j>|^2 between eigenvectors of the two bases.
double overlap_c(const ProjectiveMeasurement& a, const ProjectiveMeasurement& b);

struct BoundOptions {
  int n_radius = 50;
  int n_theta = 90;
  int n_phi = 180;
  int refine_starts = 10;
};

// Which functional is minimized over the Bloch ball.
enum class BoundObjective {
  kSumEntropyMinusState,  // sum_i H_i(sigma) - S(sigma)
  kSumEntropyOnly,        // sum_i H_i(sigma)
};

struct BoundResult {
  double value = 0.0;
  double radius = 0.0;  // Bloch radius of the minimizer
  BlochAngles angles;
  long evaluations = 0;
};

// min over single-qubit states sigma of the chosen objective, by exhaustive
// (r, theta, phi) grid plus Nelder-Mead refinement from the best grid points.
// Deterministic: ties broken lexicographically on (r, theta, phi).
BoundResult bound_term(std::span<const ProjectiveMeasurement> measurements,
                       const BoundOptions& options = {},
                       BoundObjective objective = BoundObjective::kSumEntropyMinusState);

// n seeded independent draws from outcome_distribution; returns counts.
std::vector<std::int64_t> sample_outcomes(const DensityMatrix& rho,
                                          const ProjectiveMeasurement& m,
                                          std::int64_t n, std::uint64_t seed);

// Measurement literal grammar: z | x | y | bloch:<theta>:<phi> (radians).
ProjectiveMeasurement parse_measurement_literal(const std::string& literal);

}  // namespace qcorr
