"""Fan-Taussky-Todd inequalities: numerical checks and experiments.

Thin wrapper over the C++ core. Kinds are named "ftt1", "ftt2", "conv1", "conv2".
"""

from ._ftt import (
    ConvergenceError,
    Direction,
    InvariantViolation,
    JordanVariant,
    bessel_bound1,
    bessel_bound2,
    check_dissipative,
    contraction_curve,
    dissipativity_threshold,
    eig_sym_tridiagonal,
    exp_jordan_closed,
    expm,
    extremal_vector,
    gftt2_exact_lhs,
    gftt_check,
    i0_partial,
    jordan_block,
    norm_preserving_subspace,
    operator_norm,
    run_cli,
    sharp_constant,
    threshold_alpha,
    threshold_x0,
    u_diff_eval,
    u_diff_zeros,
    u_eval,
    u_zeros,
    verify,
)

KINDS = ("ftt1", "ftt2", "conv1", "conv2")

__all__ = [name for name in dir() if not name.startswith("_")]
