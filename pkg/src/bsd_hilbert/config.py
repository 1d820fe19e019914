"""Shared numerical tolerances."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Tolerances:
    eq: float = 1e-10          # generic equality checks
    unitary: float = 1e-12     # unitarity / group-membership of generated elements
    interior: float = 1e-12    # strict margin for interior membership
    boundary: float = 1e-12    # singular values >= 1 - boundary are rejected by metrics
    svd_residual: float = 1e-12


TOL = Tolerances()
