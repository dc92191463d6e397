"""Exact linear solves over ℚ(q)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from qhowe.errors import DecompositionError
from qhowe.qarith.field import ZERO, RatQ


@dataclass(frozen=True)
class Solution:
    values: list[RatQ]
    rank: int

    @property
    def unique(self) -> bool:
        return self.rank == len(self.values)


def solve_exact(matrix: Sequence[Sequence[RatQ]], rhs: Sequence[RatQ]) -> Solution:
    """Solve ``matrix @ x = rhs`` by Gauss-Jordan elimination.

    Free variables (rank deficiency) are set to zero. Raises
    :class:`DecompositionError` when the system is inconsistent.
    """
    rows = [list(row) + [b] for row, b in zip(matrix, rhs)]
    n = len(matrix[0]) if matrix else 0
    pivots: list[int] = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv if v else v for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b if b else a for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][n]:
            raise DecompositionError()
    values = [ZERO] * n
    for i, col in enumerate(pivots):
        values[col] = rows[i][n]
    return Solution(values, len(pivots))
