"""Gaussian elimination over exact RootSum entries."""

from __future__ import annotations

from typing import Sequence

from .errors import SingularBasis
from .scalar import ZERO, RootSum


def row_reduce(rows: Sequence[Sequence[RootSum]], ncols: int):
    """Reduced row-echelon form.

    Returns ``(rows, pivots)`` where ``pivots[r]`` is the pivot column of
    row ``r``.  Pivots must be invertible, i.e. supported on at most two
    radicands; otherwise :class:`~sp4states.errors.NonInvertibleScalar`
    propagates.
    """
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        piv = None
        for i in range(r, len(work)):
            if work[i][col]:
                # prefer rational pivots: cheaper and never fails to invert
                if piv is None or (work[i][col].is_rational() and not work[piv][col].is_rational()):
                    piv = i
                    if work[i][col].is_rational():
                        break
        if piv is None:
            continue
        work[r], work[piv] = work[piv], work[r]
        inv = work[r][col].invert()
        work[r] = [x * inv if x else ZERO for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][col]:
                f = work[i][col]
                work[i] = [x - f * y if y else x for x, y in zip(work[i], work[r])]
        pivots.append(col)
        r += 1
        if r == len(work):
            break
    return work[: len(pivots)], pivots


def solve(matrix: Sequence[Sequence[RootSum]], rhs: Sequence[RootSum]) -> list[RootSum]:
    """Solve the square nonsingular system ``matrix @ x == rhs``."""
    n = len(matrix)
    aug = [list(row) + [b] for row, b in zip(matrix, rhs)]
    reduced, pivots = row_reduce(aug, n + 1)
    if len(pivots) != n or pivots[-1] == n:
        raise SingularBasis(f"singular {n}x{n} system")
    return [reduced[i][n] for i in range(n)]
