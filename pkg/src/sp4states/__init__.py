"""Exact Sp(4) > SU(2) x U(1) character states and generator matrix elements."""

from .basis import StateLabel, branch, highest_state, state
from .chargen import dim, weights, weyl_dim
from .poly import Poly, reduce
from .scalar import RootSum

__all__ = [
    "Poly", "RootSum", "StateLabel", "branch", "dim", "highest_state",
    "reduce", "state", "weights", "weyl_dim",
]
__version__ = "0.1.0"
