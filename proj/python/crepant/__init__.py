"""Exact computations for (-3,1) curves.

Lambda tables are dicts mapping (j, k) to exact rationals given as "p/q" strings or ints.
"""

from ._crepant import (
    SetupError,
    classify,
    invariants,
    jacobi_dims,
    minimal_model,
    necklace,
    necklace_abelian,
    potential,
    run_cli,
    stasheff_failures,
    verify_dg,
)

__all__ = [
    "SetupError",
    "classify",
    "invariants",
    "jacobi_dims",
    "minimal_model",
    "necklace",
    "necklace_abelian",
    "potential",
    "run_cli",
    "stasheff_failures",
    "verify_dg",
]
