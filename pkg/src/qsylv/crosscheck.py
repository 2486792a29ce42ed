"""Compare a closed-form :class:`SolutionSet` with the real-elimination oracle."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qsylv import oracle
from qsylv.quat import DEFAULT_TOL, Tolerance
from qsylv.sylvester import SolutionKind, SolutionSet, SylvesterProblem

#: agreement threshold, relative
AGREE_REL = 1e-9


@dataclass(frozen=True)
class Verdict:
    agrees: bool
    oracle_dim: int
    oracle_consistent: bool
    span_gap: float
    particular_gap: float


def span_gap(u: list[np.ndarray], v: list[np.ndarray]) -> float:
    """Largest distance of a unit vector of one orthonormal family from the span of the other.

    Zero exactly when the spans coincide.  Families of different sizes give
    ``inf``.
    """
    if len(u) != len(v):
        return float("inf")
    if not u:
        return 0.0
    U, V = np.array(u), np.array(v)
    gap_uv = np.linalg.norm(U - (U @ V.T) @ V, axis=1).max()
    gap_vu = np.linalg.norm(V - (V @ U.T) @ U, axis=1).max()
    return float(max(gap_uv, gap_vu))


def compare(p: SylvesterProblem, sol: SolutionSet, tol: Tolerance = DEFAULT_TOL) -> Verdict:
    """Check ``sol`` against elimination on the 4x4 real system.

    ``tol`` drives the oracle's rank and consistency decisions; agreement of
    spans and particular points is judged at :data:`AGREE_REL`.
    """
    m = oracle.sylvester_matrix(p.a, p.b)
    scale = oracle.operator_scale(p.a, p.b)
    null = oracle.nullspace(m, tol, scale)
    outcome = oracle.solve_or_refute(m, p.c.vec(), tol, scale)
    consistent = isinstance(outcome, oracle.Solution)

    if sol.kind is SolutionKind.EMPTY:
        return Verdict(not consistent, len(null), consistent, float("nan"), float("nan"))

    basis = [np.array(e.vec()) for e in sol.basis]
    gap = span_gap(basis, null)
    pgap = float("inf")
    if consistent:
        x = np.array(sol.particular.vec())
        d = outcome.x - x
        for e in basis:
            d = d - (e @ d) * e
        pscale = np.linalg.norm(x) + np.linalg.norm(outcome.x)
        pgap = float(np.linalg.norm(d)) / pscale if pscale > 0 else float(np.linalg.norm(d))
    agrees = bool(consistent and gap <= AGREE_REL and pgap <= AGREE_REL)
    return Verdict(agrees, len(null), consistent, gap, pgap)
