#pragma once

#include <span>
#include <string>

#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Resolution of the measurement-angle search (roughly 1 degree by default).
struct GridOptions {
  int n_theta = 181;
  int n_phi = 361;
  int refine_starts = 10;
};

// I = S(A) + S(B) - S(AB).
double mutual_information(const DensityMatrix& rho);

struct ClassicalCorrelations {
  double value = 0.0;            // C = S(B) - min_R sum_j p_j S(rho_B|j)
  BlochAngles angles;            // maximizing measurement basis on A
  double min_avg_entropy = 0.0;  // the achieved min sum_j p_j S(rho_B|j)
  long evaluations = 0;
};

// Maximizes S(B) - sum p S over projective bases on qubit A by exhaustive
// (theta, phi) grid plus Nelder-Mead refinement from the best grid points.
// extra_starts are appended to the refinement start set (used by the game
// engine to seed the search with its own bases). Requires dim_a == 2.
ClassicalCorrelations classical_correlations(const DensityMatrix& rho,
                                             const GridOptions& options = {},
                                             std::span<const BlochAngles> extra_starts = {});

enum class KOptKind { Finite, Unbounded, NoCorrelations };

struct KOpt {
  KOptKind kind = KOptKind::NoCorrelations;
  long value = 0;  // meaningful only when kind == Finite

  std::string to_string() const;
};

// floor(I/C) when C exceeds 1e-9; Unbounded when only C vanishes;
// NoCorrelations when both do. Ratios within 1e-9 of an integer are rounded
// before taking the floor.
KOpt k_opt(double mutual_info, double classical);

struct CorrelationReport {
  double s_a = 0.0;
  double s_b = 0.0;
  double s_ab = 0.0;
  double s_a_given_b = 0.0;
  double mutual_info = 0.0;  // I
  double classical = 0.0;    // C
  double discord = 0.0;      // D_A = I - C, measurements on A
  bool discord_clamped = false;
  KOpt players;
  BlochAngles opt_angles;
  double opt_min_avg_entropy = 0.0;
  long optimizer_evaluations = 0;
  // All optimization is over rank-1 projective bases, not general POVMs.
  static constexpr const char* kMeasurementModel = "rank-1 projective";
};

// All fields from a single optimizer run. Requires a two-qubit state.
CorrelationReport correlation_report(const DensityMatrix& rho,
                                     const GridOptions& options = {});

}  // namespace qcorr
