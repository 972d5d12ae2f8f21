#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcorr/correlations.hpp"
#include "qcorr/game.hpp"
#include "qcorr/matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/optimize.hpp"
#include "qcorr/states.hpp"

namespace py = pybind11;
using namespace qcorr;

namespace {

py::object k_opt_object(const KOpt& k) {
  if (k.kind == KOptKind::Finite) {
    return py::int_(k.value);
  }
  return py::str(k.to_string());
}

py::dict correlation_dict(const CorrelationReport& r) {
  py::dict d;
  d["S_A"] = r.s_a;
  d["S_B"] = r.s_b;
  d["S_AB"] = r.s_ab;
  d["S_A_given_B"] = r.s_a_given_b;
  d["I"] = r.mutual_info;
  d["C"] = r.classical;
  d["D_A"] = r.discord;
  d["discord_clamped"] = r.discord_clamped;
  d["k_opt"] = k_opt_object(r.players);
  d["opt_theta"] = r.opt_angles.theta;
  d["opt_phi"] = r.opt_angles.phi;
  d["opt_min_avg_entropy"] = r.opt_min_avg_entropy;
  d["optimizer_evals"] = r.optimizer_evaluations;
  d["measurement_model"] = CorrelationReport::kMeasurementModel;
  return d;
}

py::dict game_dict(const GameReport& r) {
  py::dict d;
  py::list players;
  for (const PlayerEntry& p : r.per_player) {
    py::dict e;
    e["player"] = p.player;
    e["measurement"] = p.measurement;
    e["S_R_given_B"] = p.entropy;
    players.append(e);
  }
  d["players"] = players;
  d["per_measurement_S_R_given_B"] = r.per_measurement_entropy;
  d["lhs_sum"] = r.lhs_sum;
  d["bound_term"] = r.bound_term;
  d["bound_term_alt"] = r.bound_term_alt;
  d["S_A"] = r.s_a;
  d["S_A_given_B"] = r.s_a_given_b;
  d["I"] = r.mutual_info;
  d["C"] = r.classical;
  d["D_A"] = r.discord;
  d["correlation_gap"] = r.correlation_gap;
  d["residual"] = r.residual;
  d["min_avg_entropy"] = r.min_avg_entropy;
  d["rhs_unclipped"] = r.rhs_unclipped;
  d["rhs_clipped"] = r.rhs_clipped;
  d["slack_unclipped"] = r.slack_unclipped;
  d["slack_clipped"] = r.slack_clipped;
  d["tightened"] = r.tightened;
  d["discord_advantage"] = r.discord_advantage;
  d["bound_violation"] = r.bound_violation;
  d["identity_gap"] = r.identity_gap;
  d["identity_ok"] = r.identity_ok;
  d["k_opt"] = k_opt_object(r.players_bound);
  d["optimizer_evals"] = r.optimizer_evaluations;
  return d;
}

GridOptions grid_options(int n_theta, int n_phi) {
  GridOptions g;
  g.n_theta = n_theta;
  g.n_phi = n_phi;
  return g;
}

BoundOptions bound_options(int n_radius, int n_theta, int n_phi) {
  BoundOptions b;
  b.n_radius = n_radius;
  b.n_theta = n_theta;
  b.n_phi = n_phi;
  return b;
}

}  // namespace

PYBIND11_MODULE(_qcorr, m) {
  m.doc() = "Correlation measures and k-party entropic uncertainty games "
            "for small bipartite quantum states";

  py::register_exception<InvalidInput>(m, "InvalidInputError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericFailureError", PyExc_RuntimeError);

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const Mat& matrix, int dim_a, int dim_b) {
             return make_density(matrix, dim_a, dim_b);
           }),
           py::arg("matrix"), py::arg("dim_a"), py::arg("dim_b"),
           "Validate and wrap a density matrix with an A x B split")
      .def_readonly("matrix", &DensityMatrix::matrix)
      .def_readonly("dim_a", &DensityMatrix::dim_a)
      .def_readonly("dim_b", &DensityMatrix::dim_b)
      .def_property_readonly("dim", &DensityMatrix::dim)
      .def("__repr__", [](const DensityMatrix& rho) {
        return "<DensityMatrix dim=" + std::to_string(rho.dim()) + " split=" +
               std::to_string(rho.dim_a) + "x" + std::to_string(rho.dim_b) + ">";
      });

  py::class_<BlochAngles>(m, "BlochAngles")
      .def(py::init<double, double>(), py::arg("theta"), py::arg("phi"))
      .def_readwrite("theta", &BlochAngles::theta)
      .def_readwrite("phi", &BlochAngles::phi)
      .def("__repr__", [](const BlochAngles& a) {
        return "BlochAngles(theta=" + std::to_string(a.theta) +
               ", phi=" + std::to_string(a.phi) + ")";
      });

  py::class_<ProjectiveMeasurement>(m, "ProjectiveMeasurement")
      .def_readonly("label", &ProjectiveMeasurement::label)
      .def_readonly("projectors", &ProjectiveMeasurement::projectors)
      .def_property_readonly("dim", &ProjectiveMeasurement::dim)
      .def("__repr__", [](const ProjectiveMeasurement& pm) {
        return "<ProjectiveMeasurement '" + pm.label + "'>";
      });

  // states
  m.def("mixed_bell", &mixed_bell, py::arg("a"),
        "a |psi+><psi+| + (1-a) |11><11| on two qubits");
  m.def("werner", &werner, py::arg("p"), "p |psi-><psi-| + (1-p) I/4");
  m.def("random_density", &random_density, py::arg("seed"), py::arg("d"), py::arg("rank"),
        "Seeded Ginibre density matrix");
  m.def("random_two_qubit", &random_two_qubit, py::arg("seed"), py::arg("rank") = 4);
  m.def("parse_state", &parse_state_literal, py::arg("literal"));
  m.def("swap_subsystems", &swap_subsystems, py::arg("rho"));
  m.def("purity", &purity, py::arg("rho"));
  m.def(
      "reduced_state",
      [](const DensityMatrix& rho, const std::string& keep) {
        if (keep != "A" && keep != "B") {
          throw InvalidInput("keep must be 'A' or 'B'");
        }
        return reduced_state(rho, keep == "A" ? Subsystem::A : Subsystem::B);
      },
      py::arg("rho"), py::arg("keep"));

  // matrix / entropy primitives
  m.def("tensor_product", &tensor_product, py::arg("a"), py::arg("b"));
  m.def(
      "partial_trace",
      [](const Mat& rho, int dim_a, int dim_b, const std::string& keep) {
        if (keep != "A" && keep != "B") {
          throw InvalidInput("keep must be 'A' or 'B'");
        }
        return partial_trace(rho, dim_a, dim_b, keep == "A" ? Subsystem::A : Subsystem::B);
      },
      py::arg("rho"), py::arg("dim_a"), py::arg("dim_b"), py::arg("keep"));
  m.def(
      "von_neumann_entropy",
      [](const DensityMatrix& rho) { return von_neumann_entropy(rho.matrix); },
      py::arg("rho"));
  m.def(
      "shannon_entropy",
      [](const std::vector<double>& p_raw) {
        const std::vector<double> p = make_probability_vector(p_raw);
        return shannon_entropy(p);
      },
      py::arg("p"));
  m.def(
      "conditional_vn_entropy",
      [](const DensityMatrix& rho) {
        return conditional_vn_entropy(rho.matrix, rho.dim_a, rho.dim_b);
      },
      py::arg("rho"), "S(A|B) = S(AB) - S(B)");
  m.def(
      "hermitian_eig",
      [](const Mat& matrix) {
        const HermitianEig eig = hermitian_eig(matrix);
        return py::make_tuple(eig.eigenvalues, eig.eigenvectors);
      },
      py::arg("matrix"), "(eigenvalues ascending, unitary eigenvector matrix)");

  // measurements
  m.def("measurement_z", &measurement_z);
  m.def("measurement_x", &measurement_x);
  m.def("measurement_y", &measurement_y);
  m.def("mub_qubit", &mub_qubit, "The qubit MUB triple [Z, X, Y]");
  m.def(
      "projective_from_bloch",
      [](double theta, double phi) { return projective_from_bloch(BlochAngles{theta, phi}); },
      py::arg("theta"), py::arg("phi"));
  m.def("make_projective", &make_projective, py::arg("label"), py::arg("projectors"));
  m.def("parse_measurement", &parse_measurement_literal, py::arg("literal"));
  m.def("bloch_angles_of", &bloch_angles_of, py::arg("measurement"));
  m.def("outcome_distribution", &outcome_distribution, py::arg("rho"), py::arg("measurement"));
  m.def(
      "measure_on_A",
      [](const DensityMatrix& rho, const ProjectiveMeasurement& meas) {
        const OutcomeEnsemble ens = measure_on_A(rho, meas);
        return py::make_tuple(ens.probabilities, ens.conditional_states);
      },
      py::arg("rho"), py::arg("measurement"),
      "(probabilities, conditional states of B); outcomes below 1e-12 dropped");
  m.def(
      "average_conditional_entropy",
      [](const DensityMatrix& rho, const ProjectiveMeasurement& meas) {
        return average_conditional_entropy(rho, meas);
      },
      py::arg("rho"), py::arg("measurement"));
  m.def("overlap_c", &overlap_c, py::arg("r1"), py::arg("r2"));
  m.def(
      "bound_term",
      [](const std::vector<ProjectiveMeasurement>& measurements, int n_radius, int n_theta,
         int n_phi, bool subtract_state_entropy) {
        const BoundResult res =
            bound_term(measurements, bound_options(n_radius, n_theta, n_phi),
                       subtract_state_entropy ? BoundObjective::kSumEntropyMinusState
                                              : BoundObjective::kSumEntropyOnly);
        py::dict d;
        d["value"] = res.value;
        d["r"] = res.radius;
        d["theta"] = res.angles.theta;
        d["phi"] = res.angles.phi;
        d["evaluations"] = res.evaluations;
        return d;
      },
      py::arg("measurements"), py::arg("n_radius") = 50, py::arg("n_theta") = 90,
      py::arg("n_phi") = 180, py::arg("subtract_state_entropy") = true,
      "min over single-qubit states of sum_i H(R_i) [- S(sigma)]");
  m.def("sample_outcomes", &sample_outcomes, py::arg("rho"), py::arg("measurement"),
        py::arg("n"), py::arg("seed"), "Seeded outcome counts, deterministic per seed");

  // correlations
  m.def("mutual_information", &mutual_information, py::arg("rho"));
  m.def(
      "classical_correlations",
      [](const DensityMatrix& rho, int n_theta, int n_phi) {
        const ClassicalCorrelations cc =
            classical_correlations(rho, grid_options(n_theta, n_phi));
        py::dict d;
        d["C"] = cc.value;
        d["theta"] = cc.angles.theta;
        d["phi"] = cc.angles.phi;
        d["min_avg_entropy"] = cc.min_avg_entropy;
        d["evaluations"] = cc.evaluations;
        return d;
      },
      py::arg("rho"), py::arg("n_theta") = 181, py::arg("n_phi") = 361);
  m.def(
      "discord",
      [](const DensityMatrix& rho, int n_theta, int n_phi) {
        return correlation_report(rho, grid_options(n_theta, n_phi)).discord;
      },
      py::arg("rho"), py::arg("n_theta") = 181, py::arg("n_phi") = 361,
      "D_A = I - C for measurements on A");
  m.def(
      "k_opt",
      [](double mutual_info, double classical) {
        return k_opt_object(k_opt(mutual_info, classical));
      },
      py::arg("mutual_info"), py::arg("classical"),
      "floor(I/C), 'Unbounded', or 'NoCorrelations'");
  m.def(
      "correlation_report",
      [](const DensityMatrix& rho, int n_theta, int n_phi) {
        return correlation_dict(correlation_report(rho, grid_options(n_theta, n_phi)));
      },
      py::arg("rho"), py::arg("n_theta") = 181, py::arg("n_phi") = 361);

  // game
  m.def("conditional_measurement_entropy", &conditional_measurement_entropy, py::arg("rho"),
        py::arg("measurement"), "S(R|B) = H(R) + sum p S(rho_B|j) - S(B)");
  m.def(
      "decompose_eq11",
      [](const DensityMatrix& rho, const std::vector<ProjectiveMeasurement>& measurements,
         int n_theta, int n_phi) {
        const Eq11Decomposition terms =
            decompose_eq11(rho, measurements, grid_options(n_theta, n_phi));
        py::dict d;
        d["sum_shannon_minus_S_A"] = terms.sum_shannon_minus_s_a;
        d["S_A_given_B"] = terms.s_a_given_b;
        d["correlation_gap"] = terms.correlation_gap;
        d["residual"] = terms.residual;
        d["lhs_sum"] = terms.lhs_sum;
        d["identity_gap"] = terms.identity_gap();
        return d;
      },
      py::arg("rho"), py::arg("measurements"), py::arg("n_theta") = 181,
      py::arg("n_phi") = 361,
      "Four-term decomposition of the summed conditional measurement entropies");
  m.def(
      "play_game",
      [](const DensityMatrix& rho, const std::vector<ProjectiveMeasurement>& measurements,
         const std::vector<std::string>& players, int n_theta, int n_phi) {
        const GameSpec spec = make_game(rho, measurements, players);
        return game_dict(play_game(spec, grid_options(n_theta, n_phi)));
      },
      py::arg("rho"), py::arg("measurements"),
      py::arg("players") = std::vector<std::string>{}, py::arg("n_theta") = 181,
      py::arg("n_phi") = 361);
  m.def("berta_rhs", &berta_rhs, py::arg("rho"), py::arg("r1"), py::arg("r2"),
        "-log2 c(R1,R2) + S(A|B)");
  m.def(
      "pati_rhs",
      [](const DensityMatrix& rho, const ProjectiveMeasurement& r1,
         const ProjectiveMeasurement& r2) { return pati_rhs(rho, r1, r2); },
      py::arg("rho"), py::arg("r1"), py::arg("r2"), "berta_rhs + max{0, D_A - C}");

  m.attr("__version__") = "0.1.0";
}
