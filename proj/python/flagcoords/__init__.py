"""Flag invariants and decorated PU(2,1) representations of surface groups."""

from ._core import (  # noqa: F401
    FlagError,
    exchange_matrix,
    pu_distance,
    random_instance,
    represent,
    solve_triangle,
    theta,
    transfer_matrix,
    triple_invariants,
    validate,
)
