// qcorr: correlation measures and entropic uncertainty games for two-qubit
// states. Subcommands: analyze, sweep, game, bound.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/correlations.hpp"
#include "qcorr/game.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitNumericFailure = 3;
constexpr int kExitOutputError = 4;

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct OutputOptions {
  std::string path;    // empty = stdout
  std::string format;  // csv | json
  std::uint64_t seed = 0;
};

void write_output(const OutputOptions& out, const std::string& payload) {
  if (out.path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(out.path, std::ios::binary | std::ios::trunc);
  if (!file) {
    throw std::ios_base::failure("cannot open output path '" + out.path + "'");
  }
  file << payload;
  if (!file.good()) {
    throw std::ios_base::failure("write failed for output path '" + out.path + "'");
  }
}

qcorr::GridOptions parse_grid(const std::string& spec) {
  qcorr::GridOptions grid;
  if (spec.empty()) {
    return grid;
  }
  int n_theta = 0;
  int n_phi = 0;
  char sep = 0;
  std::istringstream in(spec);
  if (!(in >> n_theta >> sep >> n_phi) || (sep != 'x' && sep != 'X') || !in.eof()) {
    throw qcorr::InvalidInput("--grid expects NxM, e.g. 181x361");
  }
  grid.n_theta = n_theta;
  grid.n_phi = n_phi;
  return grid;
}

qcorr::BoundOptions parse_bound_grid(const std::string& spec) {
  qcorr::BoundOptions opts;
  if (spec.empty()) {
    return opts;
  }
  int nr = 0;
  int nt = 0;
  int np = 0;
  char s1 = 0;
  char s2 = 0;
  std::istringstream in(spec);
  if (!(in >> nr >> s1 >> nt >> s2 >> np) || (s1 != 'x' && s1 != 'X') ||
      (s2 != 'x' && s2 != 'X') || !in.eof()) {
    throw qcorr::InvalidInput("--bound-grid expects RxTxP, e.g. 50x90x180");
  }
  opts.n_radius = nr;
  opts.n_theta = nt;
  opts.n_phi = np;
  return opts;
}

double ratio_of(const qcorr::CorrelationReport& r) {
  if (r.classical > 1e-9) {
    return r.mutual_info / r.classical;
  }
  if (r.mutual_info > 1e-9) {
    return std::numeric_limits<double>::infinity();
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Json report_json(const qcorr::CorrelationReport& r) {
  Json j;
  j["S_A"] = r.s_a;
  j["S_B"] = r.s_b;
  j["S_AB"] = r.s_ab;
  j["S_A_given_B"] = r.s_a_given_b;
  j["I"] = r.mutual_info;
  j["C"] = r.classical;
  j["D_A"] = r.discord;
  j["discord_clamped"] = r.discord_clamped;
  const double ratio = ratio_of(r);
  if (std::isfinite(ratio)) {
    j["ratio"] = ratio;
  } else {
    j["ratio"] = fmt6(ratio);  // "inf"/"nan": JSON has no literals for these
  }
  j["k_opt"] = r.players.kind == qcorr::KOptKind::Finite ? Json(r.players.value)
                                                         : Json(r.players.to_string());
  j["opt_theta"] = r.opt_angles.theta;
  j["opt_phi"] = r.opt_angles.phi;
  j["opt_min_avg_entropy"] = r.opt_min_avg_entropy;
  j["optimizer_evals"] = r.optimizer_evaluations;
  j["measurement_model"] = qcorr::CorrelationReport::kMeasurementModel;
  return j;
}

std::string report_csv_row(const qcorr::CorrelationReport& r) {
  std::ostringstream row;
  row << fmt6(r.s_a) << ',' << fmt6(r.s_b) << ',' << fmt6(r.s_ab) << ','
      << fmt6(r.s_a_given_b) << ',' << fmt6(r.mutual_info) << ',' << fmt6(r.classical)
      << ',' << fmt6(r.discord) << ',' << fmt6(ratio_of(r)) << ',' << r.players.to_string();
  return row.str();
}

Json game_json(const qcorr::GameReport& r, std::size_t k) {
  Json j;
  j["k"] = k;
  Json players = Json::array();
  for (const qcorr::PlayerEntry& p : r.per_player) {
    players.push_back({{"player", p.player},
                       {"measurement", p.measurement},
                       {"S_R_given_B", p.entropy}});
  }
  j["players"] = players;
  j["per_measurement_S_R_given_B"] = r.per_measurement_entropy;
  j["lhs_sum"] = r.lhs_sum;
  j["bound_term"] = r.bound_term;
  j["bound_term_alt"] = r.bound_term_alt;
  j["S_A"] = r.s_a;
  j["S_A_given_B"] = r.s_a_given_b;
  j["I"] = r.mutual_info;
  j["C"] = r.classical;
  j["D_A"] = r.discord;
  j["correlation_gap"] = r.correlation_gap;
  j["residual"] = r.residual;
  j["min_avg_entropy"] = r.min_avg_entropy;
  j["rhs_unclipped"] = r.rhs_unclipped;
  j["rhs_clipped"] = r.rhs_clipped;
  j["slack_unclipped"] = r.slack_unclipped;
  j["slack_clipped"] = r.slack_clipped;
  j["tightened"] = r.tightened;
  j["discord_advantage"] = r.discord_advantage;
  j["bound_violation"] = r.bound_violation;
  j["identity_gap"] = r.identity_gap;
  j["identity_ok"] = r.identity_ok;
  j["k_opt"] = r.players_bound.kind == qcorr::KOptKind::Finite
                   ? Json(r.players_bound.value)
                   : Json(r.players_bound.to_string());
  j["optimizer_evals"] = r.optimizer_evaluations;
  j["measurement_model"] = qcorr::CorrelationReport::kMeasurementModel;
  return j;
}

Json config_json(const std::string& command, const OutputOptions& out) {
  Json j;
  j["command"] = command;
  j["format"] = out.format;
  j["seed"] = out.seed;
  return j;
}

int run_analyze(const std::string& state_literal, const std::string& side,
                const qcorr::GridOptions& grid, const OutputOptions& out) {
  qcorr::DensityMatrix rho = qcorr::parse_state_literal(state_literal);
  if (side == "B") {
    rho = qcorr::swap_subsystems(rho);
  }
  const qcorr::CorrelationReport report = qcorr::correlation_report(rho, grid);
  std::string payload;
  if (out.format == "csv") {
    payload = "S_A,S_B,S_AB,S_A_given_B,I,C,D,ratio,k_opt\n" + report_csv_row(report) + "\n";
  } else {
    Json j;
    j["config"] = config_json("analyze", out);
    j["config"]["state"] = state_literal;
    j["config"]["side"] = side;
    j["report"] = report_json(report);
    payload = j.dump(2) + "\n";
  }
  write_output(out, payload);
  return kExitOk;
}

int run_sweep(double a_min, double a_max, int steps, const qcorr::GridOptions& grid,
              const OutputOptions& out) {
  if (!(a_min >= 0.0 && a_max <= 1.0 && a_min <= a_max)) {
    throw qcorr::InvalidInput("sweep range must satisfy 0 <= a_min <= a_max <= 1");
  }
  if (steps < 2) {
    throw qcorr::InvalidInput("sweep needs at least 2 steps");
  }
  std::vector<std::pair<double, qcorr::CorrelationReport>> rows;
  rows.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double a = a_min + (a_max - a_min) * i / (steps - 1);
    rows.emplace_back(a, qcorr::correlation_report(qcorr::mixed_bell(a), grid));
  }
  std::string payload;
  if (out.format == "json") {
    Json arr = Json::array();
    for (const auto& [a, r] : rows) {
      Json j = report_json(r);
      Json row;
      row["a"] = a;
      row.update(j);
      arr.push_back(row);
    }
    Json root;
    root["config"] = config_json("sweep", out);
    root["rows"] = arr;
    payload = root.dump(2) + "\n";
  } else {
    std::ostringstream csv;
    csv << "a,S_A,S_B,S_AB,S_A_given_B,I,C,D,ratio,k_opt\n";
    for (const auto& [a, r] : rows) {
      csv << fmt6(a) << ',' << report_csv_row(r) << '\n';
    }
    payload = csv.str();
  }
  write_output(out, payload);
  return kExitOk;
}

int run_game(const std::string& state_literal, const std::vector<std::string>& measure_literals,
             const qcorr::GridOptions& grid, const qcorr::BoundOptions& bound,
             const OutputOptions& out) {
  qcorr::DensityMatrix rho = qcorr::parse_state_literal(state_literal);
  std::vector<qcorr::ProjectiveMeasurement> measurements;
  measurements.reserve(measure_literals.size());
  for (const std::string& lit : measure_literals) {
    measurements.push_back(qcorr::parse_measurement_literal(lit));
  }
  const qcorr::GameSpec spec = qcorr::make_game(std::move(rho), std::move(measurements));
  const qcorr::GameReport report = qcorr::play_game(spec, grid, bound);
  std::string payload;
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "k,lhs_sum,bound_term,S_A_given_B,I,C,correlation_gap,residual,"
           "rhs_unclipped,rhs_clipped,slack_unclipped,slack_clipped,tightened,k_opt\n";
    csv << spec.measurements.size() << ',' << fmt6(report.lhs_sum) << ','
        << fmt6(report.bound_term) << ',' << fmt6(report.s_a_given_b) << ','
        << fmt6(report.mutual_info) << ',' << fmt6(report.classical) << ','
        << fmt6(report.correlation_gap) << ',' << fmt6(report.residual) << ','
        << fmt6(report.rhs_unclipped) << ',' << fmt6(report.rhs_clipped) << ','
        << fmt6(report.slack_unclipped) << ',' << fmt6(report.slack_clipped) << ','
        << (report.tightened ? 1 : 0) << ',' << report.players_bound.to_string() << '\n';
    payload = csv.str();
  } else {
    Json j;
    j["config"] = config_json("game", out);
    j["config"]["state"] = state_literal;
    j["config"]["measurements"] = measure_literals;
    j["report"] = game_json(report, spec.measurements.size());
    payload = j.dump(2) + "\n";
  }
  write_output(out, payload);
  return kExitOk;
}

int run_bound(const std::vector<std::string>& measure_literals,
              const qcorr::BoundOptions& bound, const OutputOptions& out) {
  std::vector<qcorr::ProjectiveMeasurement> measurements;
  measurements.reserve(measure_literals.size());
  for (const std::string& lit : measure_literals) {
    measurements.push_back(qcorr::parse_measurement_literal(lit));
  }
  const qcorr::BoundResult joint =
      qcorr::bound_term(measurements, bound, qcorr::BoundObjective::kSumEntropyMinusState);
  const qcorr::BoundResult sum_only =
      qcorr::bound_term(measurements, bound, qcorr::BoundObjective::kSumEntropyOnly);
  std::string payload;
  if (out.format == "csv") {
    std::ostringstream csv;
    csv << "k,bound_term,min_sum_entropy,argmin_r,argmin_theta,argmin_phi,evaluations\n";
    csv << measurements.size() << ',' << fmt6(joint.value) << ',' << fmt6(sum_only.value)
        << ',' << fmt6(joint.radius) << ',' << fmt6(joint.angles.theta) << ','
        << fmt6(joint.angles.phi) << ',' << joint.evaluations << '\n';
    payload = csv.str();
  } else {
    Json j;
    j["config"] = config_json("bound", out);
    j["config"]["measurements"] = measure_literals;
    j["bound_term"] = joint.value;  // min over states of [sum H - S(sigma)]
    j["min_sum_entropy"] = sum_only.value;
    j["argmin"] = {{"r", joint.radius},
                   {"theta", joint.angles.theta},
                   {"phi", joint.angles.phi}};
    j["evaluations"] = joint.evaluations;
    if (measurements.size() == 2) {
      const double c = qcorr::overlap_c(measurements[0], measurements[1]);
      j["overlap_c"] = c;
      j["minus_log2_c"] = -std::log2(c);
    }
    payload = j.dump(2) + "\n";
  }
  write_output(out, payload);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Correlation measures and entropic uncertainty games for two-qubit states"};
  app.require_subcommand(1);

  std::string state_literal;
  std::vector<std::string> measure_literals;
  std::vector<double> range_values;
  std::string grid_spec;
  std::string bound_grid_spec;
  std::string side = "A";
  OutputOptions out;
  out.format = "json";

  auto add_common = [&](CLI::App* cmd, const std::string& default_format) {
    cmd->add_option("--out", out.path, "Output path (default: stdout)");
    cmd->add_option("--format", out.format, "Output format: csv or json")
        ->default_val(default_format)
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", out.seed, "Base seed for sampling subcommands")
        ->default_val("0");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Correlation report for one state");
  analyze->add_option("--state", state_literal,
                      "State literal: mixed-bell:<a> | werner:<p> | "
                      "random:<seed>:<d>:<rank> | file:<path>")
      ->required();
  analyze->add_option("--grid", grid_spec, "Measurement grid NxM (default 181x361)");
  analyze->add_option("--side", side, "Measured subsystem: A (default) or B")
      ->check(CLI::IsMember({"A", "B"}));
  add_common(analyze, "json");

  CLI::App* sweep = app.add_subcommand("sweep", "Correlation sweep over the mixed Bell family");
  sweep->add_option("--range", range_values, "a_min a_max steps")->expected(3)->required();
  sweep->add_option("--grid", grid_spec, "Measurement grid NxM (default 181x361)");
  add_common(sweep, "csv");

  CLI::App* game = app.add_subcommand("game", "k-party uncertainty game report");
  game->add_option("--state", state_literal, "State literal")->required();
  game->add_option("--measure", measure_literals,
                   "Measurement literal (repeatable): z | x | y | bloch:<theta>:<phi>")
      ->required();
  game->add_option("--grid", grid_spec, "Measurement grid NxM (default 181x361)");
  game->add_option("--bound-grid", bound_grid_spec,
                   "Bloch-ball grid RxTxP (default 50x90x180)");
  add_common(game, "json");

  CLI::App* bound = app.add_subcommand("bound", "State-independent bound term for measurements");
  bound->add_option("--measure", measure_literals, "Measurement literal (repeatable)")
      ->required();
  bound->add_option("--bound-grid", bound_grid_spec,
                    "Bloch-ball grid RxTxP (default 50x90x180)");
  add_common(bound, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      return app.exit(e);
    }
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    const qcorr::GridOptions grid = parse_grid(grid_spec);
    const qcorr::BoundOptions bound_opts = parse_bound_grid(bound_grid_spec);
    if (analyze->parsed()) {
      return run_analyze(state_literal, side, grid, out);
    }
    if (sweep->parsed()) {
      return run_sweep(range_values[0], range_values[1],
                       static_cast<int>(range_values[2]), grid, out);
    }
    if (game->parsed()) {
      return run_game(state_literal, measure_literals, grid, bound_opts, out);
    }
    if (bound->parsed()) {
      return run_bound(measure_literals, bound_opts, out);
    }
    std::cerr << "error: no subcommand\n";
    return kExitInvalidInput;
  } catch (const qcorr::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOutputError;
  } catch (const qcorr::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kExitNumericFailure;
  }
}
