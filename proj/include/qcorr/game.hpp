#pragma once

#include <span>
#include <string>
#include <vector>

#include "qcorr/correlations.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// k-party uncertainty game: k distinct measurements on copies of a shared
// two-qubit state, one per player (Alice_1..Alice_{k-1} plus Bob).
struct GameSpec {
  DensityMatrix state;
  std::vector<ProjectiveMeasurement> measurements;
  std::vector<std::string> players;  // players[i] performs measurements[i]
};

// Validates k >= 2, pairwise distinct measurement labels, and that players
// (defaulted to Alice_1..Alice_{k-1}, Bob) form a bijection onto the
// measurement list.
GameSpec make_game(DensityMatrix state, std::vector<ProjectiveMeasurement> measurements,
                   std::vector<std::string> players = {});

// S(R|B) = H(R) + sum_j p_j S(rho_B|j) - S(B).
double conditional_measurement_entropy(const DensityMatrix& rho_ab,
                                       const ProjectiveMeasurement& m);

// The four right-hand-side terms of the exact k-measurement identity
//   sum_i S(R_i|B) = [sum_i H(R_i) - S(A)] + S(A|B) + (I - kC) + residual,
// with residual = sum_i sum_j p S - k * (min sum p S). The shared minimum
// must be the same one used inside C for the identity to close exactly.
struct Eq11Decomposition {
  double sum_shannon_minus_s_a = 0.0;
  double s_a_given_b = 0.0;
  double correlation_gap = 0.0;  // I - kC
  double residual = 0.0;
  double lhs_sum = 0.0;

  double rhs_sum() const {
    return sum_shannon_minus_s_a + s_a_given_b + correlation_gap + residual;
  }
  double identity_gap() const { return lhs_sum - rhs_sum(); }
};

Eq11Decomposition decompose_eq11(const DensityMatrix& rho,
                                 std::span<const ProjectiveMeasurement> measurements,
                                 const ClassicalCorrelations& shared);

// Convenience overload running its own optimizer (seeded with the
// measurement bases).
Eq11Decomposition decompose_eq11(const DensityMatrix& rho,
                                 std::span<const ProjectiveMeasurement> measurements,
                                 const GridOptions& options = {});

struct PlayerEntry {
  std::string player;
  std::string measurement;
  double entropy = 0.0;  // S(R|B)
};

struct GameReport {
  std::vector<PlayerEntry> per_player;
  std::vector<double> per_measurement_entropy;
  double lhs_sum = 0.0;

  // Bound term conventions (the state entropy inside vs outside the
  // minimization); the unclipped/clipped right-hand sides use bound_term.
  double bound_term = 0.0;      // min_sigma [sum H_i(sigma) - S(sigma)]
  double bound_term_alt = 0.0;  // min_sigma [sum H_i(sigma)] - S(A)

  double s_a = 0.0;
  double s_a_given_b = 0.0;
  double mutual_info = 0.0;
  double classical = 0.0;
  double discord = 0.0;
  double correlation_gap = 0.0;  // I - kC
  double residual = 0.0;
  double min_avg_entropy = 0.0;  // shared min sum p S

  double rhs_unclipped = 0.0;  // bound_term + S(A|B) + (I - kC)
  double rhs_clipped = 0.0;    // bound_term + S(A|B) + max{0, I - kC}
  double slack_unclipped = 0.0;
  double slack_clipped = 0.0;

  bool tightened = false;        // I - kC > 0
  bool discord_advantage = false;  // D_A > C
  bool bound_violation = false;  // slack_unclipped < -1e-6
  double identity_gap = 0.0;
  bool identity_ok = false;      // |identity_gap| <= 1e-9

  KOpt players_bound;  // floor(I/C)
  long optimizer_evaluations = 0;
};

GameReport play_game(const GameSpec& spec, const GridOptions& grid = {},
                     const BoundOptions& bound = {});

// Two-measurement memory-assisted bound: -log2 c(R1,R2) + S(A|B).
double berta_rhs(const DensityMatrix& rho, const ProjectiveMeasurement& r1,
                 const ProjectiveMeasurement& r2);

// Discord-tightened two-measurement bound: berta_rhs + max{0, D_A - C}.
double pati_rhs(const DensityMatrix& rho, const ProjectiveMeasurement& r1,
                const ProjectiveMeasurement& r2, const GridOptions& options = {});

}  // namespace qcorr
