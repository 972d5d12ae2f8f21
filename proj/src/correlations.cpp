#include "qcorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "qcorr/optimize.hpp"

namespace qcorr {

double mutual_information(const DensityMatrix& rho) {
  if (!rho.bipartite()) {
    throw InvalidInput("mutual_information: bipartite state required");
  }
  const double s_a = von_neumann_entropy(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, Subsystem::A));
  const double s_b = von_neumann_entropy(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, Subsystem::B));
  const double s_ab = von_neumann_entropy(rho.matrix);
  return s_a + s_b - s_ab;
}

namespace {

struct Candidate {
  double value;
  double theta, phi;
};

}  // namespace

ClassicalCorrelations classical_correlations(const DensityMatrix& rho,
                                             const GridOptions& options,
                                             std::span<const BlochAngles> extra_starts) {
  if (rho.dim_a != 2) {
    throw InvalidInput("classical_correlations: unsupported dimension, "
                       "the measurement optimizer requires a qubit on A");
  }
  if (!rho.bipartite()) {
    throw InvalidInput("classical_correlations: bipartite state required");
  }
  if (options.n_theta < 2 || options.n_phi < 2) {
    throw InvalidInput("classical_correlations: grid resolution must be at least 2 per axis");
  }

  long evaluations = 0;
  auto objective = [&](double theta, double phi) {
    ++evaluations;
    return average_conditional_entropy(rho, BlochAngles{theta, phi});
  };

  const int nt = options.n_theta;
  const int np = options.n_phi;
  std::vector<Candidate> best;
  const std::size_t keep = static_cast<std::size_t>(std::max(1, options.refine_starts));
  for (int j = 0; j < nt; ++j) {
    const double theta = M_PI * j / (nt - 1);
    for (int k = 0; k < np; ++k) {
      const double phi = 2.0 * M_PI * k / (np - 1);
      const double value = objective(theta, phi);
      if (best.size() < keep || value < best.back().value) {
        Candidate cand{value, theta, phi};
        auto pos = std::upper_bound(
            best.begin(), best.end(), cand,
            [](const Candidate& a, const Candidate& b) { return a.value < b.value; });
        best.insert(pos, cand);
        if (best.size() > keep) {
          best.pop_back();
        }
      }
    }
  }
  std::vector<Candidate> starts = best;
  for (const BlochAngles& angles : extra_starts) {
    starts.push_back({objective(angles.theta, angles.phi), angles.theta, angles.phi});
  }

  Candidate winner = starts.front();
  for (const Candidate& c : starts) {
    if (c.value < winner.value) {
      winner = c;
    }
  }
  auto wrapped = [&](std::span<const double> x) { return objective(x[0], x[1]); };
  for (const Candidate& start : starts) {
    const std::array<double, 2> x0 = {start.theta, start.phi};
    NelderMeadOptions nm;
    nm.max_iterations = 400;
    nm.value_tolerance = 1e-14;
    nm.point_tolerance = 1e-9;
    const NelderMeadResult res = nelder_mead(wrapped, x0, 0.01, nm);
    if (res.value < winner.value) {
      winner = {res.value, res.point[0], res.point[1]};
    }
  }

  const double s_b =
      von_neumann_entropy(partial_trace(rho.matrix, rho.dim_a, rho.dim_b, Subsystem::B));
  BlochAngles arg{winner.theta, winner.phi};
  // canonicalize through the measurement factory so reported angles match labels
  arg = bloch_angles_of(projective_from_bloch(arg));
  return ClassicalCorrelations{s_b - winner.value, arg, winner.value, evaluations};
}

std::string KOpt::to_string() const {
  switch (kind) {
    case KOptKind::Finite:
      return std::to_string(value);
    case KOptKind::Unbounded:
      return "Unbounded";
    case KOptKind::NoCorrelations:
      return "NoCorrelations";
  }
  return "NoCorrelations";
}

KOpt k_opt(double mutual_info, double classical) {
  constexpr double kEps = 1e-9;
  if (mutual_info < -kEps || classical < -kEps) {
    throw InvalidInput("k_opt: negative correlation measures");
  }
  if (classical <= kEps) {
    if (mutual_info <= kEps) {
      return KOpt{KOptKind::NoCorrelations, 0};
    }
    return KOpt{KOptKind::Unbounded, 0};
  }
  const double ratio = std::max(0.0, mutual_info) / classical;
  const double rounded = std::round(ratio);
  // ratios that are integral within 1e-9 floor to that integer, so exact
  // boundaries like I/C = 2 are not lost to floating-point dust
  if (std::abs(ratio - rounded) < 1e-9) {
    return KOpt{KOptKind::Finite, static_cast<long>(rounded)};
  }
  return KOpt{KOptKind::Finite, static_cast<long>(std::floor(ratio))};
}

CorrelationReport correlation_report(const DensityMatrix& rho, const GridOptions& options) {
  if (rho.dim_a != 2 || rho.dim_b != 2) {
    throw InvalidInput("correlation_report: two-qubit state required");
  }
  CorrelationReport report;
  report.s_a = von_neumann_entropy(partial_trace(rho.matrix, 2, 2, Subsystem::A));
  report.s_b = von_neumann_entropy(partial_trace(rho.matrix, 2, 2, Subsystem::B));
  report.s_ab = von_neumann_entropy(rho.matrix);
  report.s_a_given_b = report.s_ab - report.s_b;
  report.mutual_info = report.s_a + report.s_b - report.s_ab;

  const ClassicalCorrelations cc = classical_correlations(rho, options);
  report.classical = cc.value;
  report.opt_angles = cc.angles;
  report.opt_min_avg_entropy = cc.min_avg_entropy;
  report.optimizer_evaluations = cc.evaluations;

  report.discord = report.mutual_info - report.classical;
  if (report.discord < 0.0 && report.discord >= -1e-6) {
    // the optimizer can only under-estimate C, so a tiny negative discord is
    // numerical; zero it and record that we did
    report.discord = 0.0;
    report.discord_clamped = true;
  }
  report.players = k_opt(std::max(0.0, report.mutual_info), std::max(0.0, report.classical));
  return report;
}

}  // namespace qcorr
