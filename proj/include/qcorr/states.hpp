#pragma once

#include <cstdint>
#include <string>

#include "qcorr/matrix.hpp"

namespace qcorr {

// Hermitian, unit-trace, positive-semidefinite operator, optionally split
// into an A x B bipartition (dim_b == 1 means a single undivided system).
struct DensityMatrix {
  Mat matrix;
  int dim_a = 0;
  int dim_b = 1;

  int dim() const { return dim_a * dim_b; }
  bool bipartite() const { return dim_a > 1 && dim_b > 1; }
};

// Validates all invariants (Hermitian within 1e-10, trace 1 within 1e-10,
// eigenvalues >= -1e-9, finite, dim <= 64). Throws InvalidInput naming the
// violated invariant.
DensityMatrix make_density(Mat m, int dim_a, int dim_b);

// a |psi+><psi+| + (1 - a) |11><11| with |psi+> = (|01> + |10>)/sqrt(2).
DensityMatrix mixed_bell(double a);

// p |psi-><psi-| + (1 - p) I/4 with |psi-> = (|01> - |10>)/sqrt(2).
DensityMatrix werner(double p);

// G G^dagger / tr(G G^dagger) with G a seeded d x rank complex Gaussian
// (Ginibre) matrix. Deterministic per seed.
DensityMatrix random_density(std::uint64_t seed, int d, int rank);

// Two-qubit convenience wrapper around random_density(seed, 4, rank).
DensityMatrix random_two_qubit(std::uint64_t seed, int rank = 4);

DensityMatrix reduced_state(const DensityMatrix& rho, Subsystem keep);

// Exchanges the roles of A and B (basis permutation |ab> -> |ba>).
DensityMatrix swap_subsystems(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);

// State literal grammar: mixed-bell:<a> | werner:<p> | random:<seed>:<d>:<rank>
// | file:<path>.
DensityMatrix parse_state_literal(const std::string& literal);

// Plain-text format: line 1 "d_A d_B", then d*d lines "re im" in row-major
// order (d = d_A * d_B).
DensityMatrix load_state_file(const std::string& path);

}  // namespace qcorr
