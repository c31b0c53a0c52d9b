# utils/lp.py
"""
Exact rational simplex over the standard form ``A x = b, x >= 0``.

Phase 1 always runs with one artificial column per row. When the artificial
optimum is positive the final reduced costs of the artificial columns give a
Farkas certificate ``y`` with ``y.A <= 0`` and ``y.b > 0``. Phase 2 reuses the
feasible basis for an optional linear objective.
"""

from fractions import Fraction
from typing import Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict

from exceptions import CertificateError, InfeasibleError, UnboundedError
from logger import StructuredLogger

logger = StructuredLogger("utils.lp")

RESOLUTION_FEASIBLE = "feasible"
RESOLUTION_INFEASIBLE = "infeasible"
RESOLUTION_OPTIMAL = "optimal"

# Dantzig pricing switches to Bland's rule after this many zero-step pivots
DEGENERATE_STREAK_LIMIT = 50

ZERO = Fraction(0)
ONE = Fraction(1)


class LPResult(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    resolution: str
    x: Optional[Tuple[Fraction, ...]] = None
    farkas: Optional[Tuple[Fraction, ...]] = None
    objective: Optional[Fraction] = None
    pivots: int = 0

    @property
    def feasible(self) -> bool:
        return self.resolution != RESOLUTION_INFEASIBLE


def as_fraction_matrix(a) -> np.ndarray:
    rows = [[Fraction(v) for v in row] for row in a]
    width = len(rows[0]) if rows else 0
    for row in rows:
        if len(row) != width:
            raise ValueError("Constraint matrix rows must all have the same length")
    matrix = np.empty((len(rows), width), dtype=object)
    for i, row in enumerate(rows):
        matrix[i, :] = row
    return matrix


def as_fraction_vector(b) -> np.ndarray:
    values = [Fraction(v) for v in b]
    vector = np.empty(len(values), dtype=object)
    vector[:] = values
    return vector


class SimplexTableau:
    """
    Dense tableau with the objective (reduced cost) row stored last and the
    right-hand side stored in the last column.
    """

    def __init__(self, a: np.ndarray, b: np.ndarray):
        self.m, self.n = a.shape
        if b.shape[0] != self.m:
            raise ValueError(
                f"Right-hand side has {b.shape[0]} entries for {self.m} constraint rows"
            )
        self.flipped = np.array([bi < 0 for bi in b], dtype=bool)
        width = self.n + self.m + 1
        tableau = np.full((self.m + 1, width), ZERO, dtype=object)
        for i in range(self.m):
            sign = -1 if self.flipped[i] else 1
            tableau[i, : self.n] = a[i, :] * sign
            tableau[i, self.n + i] = ONE
            tableau[i, -1] = b[i] * sign
        # phase 1 reduced costs with every artificial basic
        for i in range(self.m):
            tableau[self.m, : self.n] -= tableau[i, : self.n]
            tableau[self.m, -1] -= tableau[i, -1]
        self.tableau = tableau
        self.basis = [self.n + i for i in range(self.m)]
        self.pivots = 0
        self._bland = False
        self._streak = 0

    def _pivot(self, row: int, col: int):
        t = self.tableau
        t[row, :] = t[row, :] / t[row, col]
        for i in np.flatnonzero(t[:, col] != 0):
            if i == row:
                continue
            factor = t[i, col]
            t[i, :] -= factor * t[row, :]
        self.basis[row] = col
        self.pivots += 1

    def _entering(self, allowed: np.ndarray) -> Optional[int]:
        costs = self.tableau[-1, :-1]
        candidates = np.flatnonzero((costs < 0) & allowed)
        if candidates.size == 0:
            return None
        if self._bland:
            return int(candidates[0])
        return int(candidates[np.argmin(costs[candidates])])

    def _leaving(self, col: int) -> Optional[int]:
        t = self.tableau
        column = t[:-1, col]
        rows = np.flatnonzero(column > 0)
        if rows.size == 0:
            return None
        ratios = t[rows, -1] / column[rows]
        best = min(ratios)
        ties = rows[ratios == best]
        if best == 0:
            self._streak += 1
            if self._streak > DEGENERATE_STREAK_LIMIT and not self._bland:
                logger.debug("Switching to Bland pricing", pivots=self.pivots)
                self._bland = True
        else:
            self._streak = 0
        return int(min(ties, key=lambda r: self.basis[r]))

    def run(self, allowed: np.ndarray):
        while True:
            col = self._entering(allowed)
            if col is None:
                return
            row = self._leaving(col)
            if row is None:
                raise UnboundedError(f"Objective is unbounded along column {col}")
            self._pivot(row, col)

    def basic_solution(self) -> list:
        x = [ZERO] * self.n
        for row, col in enumerate(self.basis):
            if col < self.n:
                x[col] = self.tableau[row, -1]
        return x

    def farkas_vector(self) -> list:
        reduced = self.tableau[-1, self.n : self.n + self.m]
        y = []
        for i in range(self.m):
            value = ONE - reduced[i]
            y.append(-value if self.flipped[i] else value)
        return y

    def drop_artificials(self):
        """Pivot artificials out of the basis and delete redundant rows."""
        t = self.tableau
        keep = []
        for row in range(self.m):
            if self.basis[row] < self.n:
                keep.append(row)
                continue
            nonzero = np.flatnonzero(t[row, : self.n] != 0)
            if nonzero.size:
                self._pivot(row, int(nonzero[0]))
                keep.append(row)
        columns = list(range(self.n)) + [t.shape[1] - 1]
        self.tableau = t[np.ix_(keep + [self.m], columns)]
        self.basis = [self.basis[row] for row in keep]
        self.m = len(keep)


def _check_solution(a: np.ndarray, b: np.ndarray, x: list):
    vector = as_fraction_vector(x)
    if any(v < 0 for v in x) or list(a.dot(vector)) != list(b):
        raise CertificateError("Simplex returned a point that does not satisfy A x = b")


def _check_farkas(a: np.ndarray, b: np.ndarray, y: list):
    vector = as_fraction_vector(y)
    if any(v > 0 for v in vector.dot(a)) or vector.dot(b) <= 0:
        raise CertificateError("Simplex returned an invalid Farkas certificate")


def _phase_one(a, b):
    a = as_fraction_matrix(a)
    b = as_fraction_vector(b)
    tableau = SimplexTableau(a, b)
    tableau.run(np.ones(tableau.n + tableau.m, dtype=bool))
    return a, b, tableau


def find_feasible_point(a, b) -> LPResult:
    """
    Decide whether ``A x = b`` has a nonnegative solution.

    Args:
        a: constraint rows (anything convertible to Fraction).
        b: right-hand side.

    Returns:
        LPResult with ``x`` when feasible, otherwise with ``farkas``.
    """
    a, b, tableau = _phase_one(a, b)
    infeasibility = -tableau.tableau[-1, -1]
    if infeasibility > 0:
        y = tableau.farkas_vector()
        _check_farkas(a, b, y)
        logger.debug(
            "LP infeasible", rows=tableau.m, columns=tableau.n, pivots=tableau.pivots
        )
        return LPResult(
            resolution=RESOLUTION_INFEASIBLE, farkas=tuple(y), pivots=tableau.pivots
        )
    x = tableau.basic_solution()
    _check_solution(a, b, x)
    logger.debug("LP feasible", rows=tableau.m, columns=tableau.n, pivots=tableau.pivots)
    return LPResult(resolution=RESOLUTION_FEASIBLE, x=tuple(x), pivots=tableau.pivots)


def optimize(a, b, c, maximize=False) -> LPResult:
    """
    Minimize (or maximize) ``c.x`` subject to ``A x = b, x >= 0``.

    Raises InfeasibleError or UnboundedError.
    """
    a, b, tableau = _phase_one(a, b)
    if -tableau.tableau[-1, -1] > 0:
        raise InfeasibleError("Linear program has no feasible point")
    tableau.drop_artificials()
    costs = as_fraction_vector(c)
    if costs.shape[0] != tableau.n:
        raise ValueError(f"Objective has {costs.shape[0]} entries for {tableau.n} columns")
    if maximize:
        costs = -costs
    t = tableau.tableau
    t[-1, :-1] = costs
    t[-1, -1] = ZERO
    for row, col in enumerate(tableau.basis):
        if costs[col] != 0:
            t[-1, :] -= costs[col] * t[row, :]
    tableau.run(np.ones(tableau.n, dtype=bool))
    x = tableau.basic_solution()
    _check_solution(a, b, x)
    value = sum((cj * xj for cj, xj in zip(as_fraction_vector(c), x)), ZERO)
    return LPResult(
        resolution=RESOLUTION_OPTIMAL, x=tuple(x), objective=value, pivots=tableau.pivots
    )
