"""Correlation measures and k-party entropic uncertainty games for
small bipartite quantum states.

The heavy lifting lives in the compiled extension ``qcorr._qcorr``;
this package re-exports its public surface.
"""

from ._qcorr import (  # noqa: F401
    BlochAngles,
    DensityMatrix,
    InvalidInputError,
    NumericFailureError,
    ProjectiveMeasurement,
    __version__,
    average_conditional_entropy,
    berta_rhs,
    bloch_angles_of,
    bound_term,
    classical_correlations,
    conditional_measurement_entropy,
    conditional_vn_entropy,
    correlation_report,
    decompose_eq11,
    discord,
    hermitian_eig,
    k_opt,
    make_projective,
    measure_on_A,
    measurement_x,
    measurement_y,
    measurement_z,
    mixed_bell,
    mub_qubit,
    mutual_information,
    outcome_distribution,
    parse_measurement,
    parse_state,
    partial_trace,
    pati_rhs,
    play_game,
    projective_from_bloch,
    purity,
    random_density,
    random_two_qubit,
    reduced_state,
    sample_outcomes,
    shannon_entropy,
    swap_subsystems,
    tensor_product,
    von_neumann_entropy,
    werner,
)
