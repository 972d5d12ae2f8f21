#include "qcorr/game.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qcorr {

namespace {

void validate_game_state(const DensityMatrix& state) {
  if (state.dim_a != 2 || state.dim_b != 2) {
    throw InvalidInput("uncertainty game: two-qubit state required");
  }
}

std::vector<BlochAngles> measurement_angles(std::span<const ProjectiveMeasurement> measurements) {
  std::vector<BlochAngles> angles;
  angles.reserve(measurements.size());
  for (const ProjectiveMeasurement& m : measurements) {
    angles.push_back(bloch_angles_of(m));
  }
  return angles;
}

}  // namespace

GameSpec make_game(DensityMatrix state, std::vector<ProjectiveMeasurement> measurements,
                   std::vector<std::string> players) {
  validate_game_state(state);
  if (measurements.size() < 2) {
    throw InvalidInput("uncertainty game: at least 2 measurements required "
                       "(Bob plus at least one Alice)");
  }
  std::set<std::string> labels;
  for (const ProjectiveMeasurement& m : measurements) {
    if (m.dim() != 2) {
      throw InvalidInput("uncertainty game: qubit measurements required");
    }
    if (!labels.insert(m.label).second) {
      throw InvalidInput("uncertainty game: duplicate measurement label '" + m.label + "'");
    }
  }
  if (players.empty()) {
    for (std::size_t i = 0; i + 1 < measurements.size(); ++i) {
      players.push_back("Alice_" + std::to_string(i + 1));
    }
    players.push_back("Bob");
  }
  if (players.size() != measurements.size()) {
    throw InvalidInput("uncertainty game: assignment must map exactly one player "
                       "to each measurement");
  }
  std::set<std::string> names(players.begin(), players.end());
  if (names.size() != players.size()) {
    throw InvalidInput("uncertainty game: duplicate player name");
  }
  return GameSpec{std::move(state), std::move(measurements), std::move(players)};
}

double conditional_measurement_entropy(const DensityMatrix& rho_ab,
                                       const ProjectiveMeasurement& m) {
  validate_game_state(rho_ab);
  const DensityMatrix rho_a = reduced_state(rho_ab, Subsystem::A);
  const double h = shannon_entropy(outcome_distribution(rho_a, m));
  const double avg = average_conditional_entropy(rho_ab, m);
  const double s_b = von_neumann_entropy(partial_trace(rho_ab.matrix, 2, 2, Subsystem::B));
  return h + avg - s_b;
}

Eq11Decomposition decompose_eq11(const DensityMatrix& rho,
                                 std::span<const ProjectiveMeasurement> measurements,
                                 const ClassicalCorrelations& shared) {
  validate_game_state(rho);
  if (measurements.size() < 2) {
    throw InvalidInput("decompose_eq11: at least 2 measurements required");
  }
  const double k = static_cast<double>(measurements.size());
  const DensityMatrix rho_a = reduced_state(rho, Subsystem::A);
  const double s_a = von_neumann_entropy(rho_a.matrix);
  const double s_b = von_neumann_entropy(partial_trace(rho.matrix, 2, 2, Subsystem::B));
  const double s_ab = von_neumann_entropy(rho.matrix);
  const double mutual = s_a + s_b - s_ab;

  double sum_shannon = 0.0;
  double sum_avg = 0.0;
  double lhs = 0.0;
  for (const ProjectiveMeasurement& m : measurements) {
    const double h = shannon_entropy(outcome_distribution(rho_a, m));
    const double avg = average_conditional_entropy(rho, m);
    sum_shannon += h;
    sum_avg += avg;
    lhs += h + avg - s_b;
  }

  Eq11Decomposition out;
  out.sum_shannon_minus_s_a = sum_shannon - s_a;
  out.s_a_given_b = s_ab - s_b;
  out.correlation_gap = mutual - k * shared.value;
  out.residual = sum_avg - k * shared.min_avg_entropy;
  out.lhs_sum = lhs;
  return out;
}

Eq11Decomposition decompose_eq11(const DensityMatrix& rho,
                                 std::span<const ProjectiveMeasurement> measurements,
                                 const GridOptions& options) {
  const std::vector<BlochAngles> starts = measurement_angles(measurements);
  const ClassicalCorrelations shared = classical_correlations(rho, options, starts);
  return decompose_eq11(rho, measurements, shared);
}

GameReport play_game(const GameSpec& spec, const GridOptions& grid, const BoundOptions& bound) {
  validate_game_state(spec.state);
  if (spec.measurements.size() < 2) {
    throw InvalidInput("uncertainty game: at least 2 measurements required");
  }
  const double k = static_cast<double>(spec.measurements.size());

  // One optimizer run shared between C and the residual; seeding the search
  // with the game's own bases keeps the achieved minimum at or below every
  // per-measurement average, so the residual stays nonnegative.
  const std::vector<BlochAngles> starts = measurement_angles(spec.measurements);
  const ClassicalCorrelations shared = classical_correlations(spec.state, grid, starts);
  const Eq11Decomposition terms = decompose_eq11(spec.state, spec.measurements, shared);

  GameReport report;
  report.s_a = von_neumann_entropy(partial_trace(spec.state.matrix, 2, 2, Subsystem::A));
  report.s_a_given_b = terms.s_a_given_b;
  report.mutual_info = terms.correlation_gap + k * shared.value;
  report.classical = shared.value;
  report.discord = report.mutual_info - report.classical;
  report.correlation_gap = terms.correlation_gap;
  report.residual = terms.residual;
  report.min_avg_entropy = shared.min_avg_entropy;
  report.optimizer_evaluations = shared.evaluations;

  const DensityMatrix rho_a = reduced_state(spec.state, Subsystem::A);
  const double s_b =
      von_neumann_entropy(partial_trace(spec.state.matrix, 2, 2, Subsystem::B));
  for (std::size_t i = 0; i < spec.measurements.size(); ++i) {
    const ProjectiveMeasurement& m = spec.measurements[i];
    const double h = shannon_entropy(outcome_distribution(rho_a, m));
    const double avg = average_conditional_entropy(spec.state, m);
    const double entry = h + avg - s_b;
    report.per_measurement_entropy.push_back(entry);
    const std::string player = i < spec.players.size() ? spec.players[i] : "";
    report.per_player.push_back(PlayerEntry{player, m.label, entry});
    report.lhs_sum += entry;
  }

  const BoundResult joint =
      bound_term(spec.measurements, bound, BoundObjective::kSumEntropyMinusState);
  const BoundResult sum_only =
      bound_term(spec.measurements, bound, BoundObjective::kSumEntropyOnly);
  report.bound_term = joint.value;
  report.bound_term_alt = sum_only.value - report.s_a;

  report.rhs_unclipped = report.bound_term + report.s_a_given_b + report.correlation_gap;
  report.rhs_clipped =
      report.bound_term + report.s_a_given_b + std::max(0.0, report.correlation_gap);
  report.slack_unclipped = report.lhs_sum - report.rhs_unclipped;
  report.slack_clipped = report.lhs_sum - report.rhs_clipped;
  report.tightened = report.correlation_gap > 0.0;
  report.discord_advantage = report.discord > report.classical;
  report.bound_violation = report.slack_unclipped < -1e-6;
  report.identity_gap = terms.identity_gap();
  report.identity_ok = std::abs(report.identity_gap) <= 1e-9;
  report.players_bound =
      k_opt(std::max(0.0, report.mutual_info), std::max(0.0, report.classical));
  return report;
}

double berta_rhs(const DensityMatrix& rho, const ProjectiveMeasurement& r1,
                 const ProjectiveMeasurement& r2) {
  validate_game_state(rho);
  return -std::log2(overlap_c(r1, r2)) + conditional_vn_entropy(rho.matrix, 2, 2);
}

double pati_rhs(const DensityMatrix& rho, const ProjectiveMeasurement& r1,
                const ProjectiveMeasurement& r2, const GridOptions& options) {
  const double base = berta_rhs(rho, r1, r2);
  const ClassicalCorrelations cc = classical_correlations(rho, options);
  const double mutual = mutual_information(rho);
  const double discord = mutual - cc.value;
  return base + std::max(0.0, discord - cc.value);
}

}  // namespace qcorr
