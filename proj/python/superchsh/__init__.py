"""Superqubit CHSH game toolkit.

Grassmann-algebra arithmetic, UOSp(1|2) superqubit states, the three
Grassmann-to-real probability maps, and the CHSH game evaluator/optimizer
are implemented in C++ and exposed through the `_core` extension.
"""

from ._core import (  # noqa: F401
    Basis,
    CheckResult,
    ExtractionError,
    GameOptions,
    GameParameters,
    GameReport,
    MapKind,
    OptConfig,
    OptResult,
    Parity,
    Party,
    Supernumber,
    SuperKet3,
    SuperKet9,
    SuperMatrix,
    TrigContext,
    TrigScale,
    __version__,
    apply,
    apply_local,
    body,
    classical_best,
    evaluate_paper_params,
    extract,
    feasibility,
    gamma_state,
    graded_adjoint,
    grassmann_prob,
    involution,
    is_winning_cell,
    max_coeff_dist,
    mul,
    optimize,
    outcome_tables,
    paper_winning_parameters,
    parity,
    play_game,
    quantum_baseline,
    rogers,
    run_checks,
    s_element,
    superqubit_state,
    theta,
    theta_hash,
    u_element,
    win_probability,
    zero_parameters,
)
