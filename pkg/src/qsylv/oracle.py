"""Real 4x4 embedding of ``x -> a x - x b`` and a small Gaussian-elimination kit.

This module is the independent check for the closed-form solvers: it never
imports :mod:`qsylv.roots` or :mod:`qsylv.sylvester`, and it reads quaternions
only through their ``(w, x, y, z)`` components.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from qsylv.quat import DEFAULT_TOL, Tolerance

__all__ = [
    "left_embed",
    "right_embed",
    "sylvester_matrix",
    "operator_scale",
    "rref",
    "nullspace",
    "orthonormalize",
    "solve_or_refute",
    "Solution",
    "Inconsistent",
]


def left_embed(a) -> np.ndarray:
    """Matrix ``L`` with ``L @ vec(x) == vec(a x)``."""
    w, x, y, z = a.w, a.x, a.y, a.z
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ],
        dtype=float,
    )


def right_embed(b) -> np.ndarray:
    """Matrix ``R`` with ``R @ vec(x) == vec(x b)``."""
    w, x, y, z = b.w, b.x, b.y, b.z
    return np.array(
        [
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ],
        dtype=float,
    )


def sylvester_matrix(a, b) -> np.ndarray:
    return left_embed(a) - right_embed(b)


def operator_scale(a, b) -> float:
    """Natural size of ``x -> a x - x b``: the larger operand norm.

    Rank decisions on :func:`sylvester_matrix` should be made at this scale,
    which is also the scale at which ``a`` and ``b`` are compared.
    """
    return max(
        float(np.linalg.norm([a.w, a.x, a.y, a.z])),
        float(np.linalg.norm([b.w, b.x, b.y, b.z])),
    )


def rref(m, tol: Tolerance = DEFAULT_TOL, ncols: int | None = None, scale: float | None = None):
    """Reduced row echelon form with partial pivoting.

    Only the first ``ncols`` columns are eligible as pivots (all by default),
    which lets an augmented matrix carry its right-hand side along.  A column
    whose largest remaining entry is at most ``tol.rel * scale`` is treated
    as free.  ``scale`` defaults to ``max|m[:, :ncols]|``; pass the size of
    the operands when ``m`` is a difference of nearly equal matrices, or
    pure rounding noise will be read as full rank.

    Returns the reduced matrix and the list of pivot columns.
    """
    # plain lists: for 4x4 work numpy call overhead dominates
    r = [[float(v) for v in row] for row in np.asarray(m, dtype=float)]
    nrows = len(r)
    width = len(r[0]) if r else 0
    if ncols is None:
        ncols = width
    biggest = max((abs(row[c]) for row in r for c in range(ncols)), default=0.0)
    scale = biggest if scale is None else max(scale, biggest)
    thresh = tol.rel * scale
    pivots = []
    row = 0
    for col in range(ncols):
        if row == nrows:
            break
        p = max(range(row, nrows), key=lambda i: abs(r[i][col]))
        if scale == 0.0 or abs(r[p][col]) <= thresh:
            for i in range(row, nrows):
                r[i][col] = 0.0
            continue
        r[row], r[p] = r[p], r[row]
        piv = r[row]
        d = piv[col]
        piv[:] = [v / d for v in piv]
        for i in range(nrows):
            f = r[i][col]
            if i != row and f != 0.0:
                ri = r[i]
                r[i] = [vi - f * vp for vi, vp in zip(ri, piv)]
                r[i][col] = 0.0
        piv[col] = 1.0
        pivots.append(col)
        row += 1
    return np.array(r, dtype=float).reshape(nrows, width), pivots


def orthonormalize(vectors, tol: Tolerance = DEFAULT_TOL) -> list[np.ndarray]:
    """Modified Gram-Schmidt; vectors that collapse below ``tol`` are dropped."""
    out: list[np.ndarray] = []
    for v in vectors:
        u = np.array(v, dtype=float)
        start = float(np.linalg.norm(u))
        for _ in range(2):
            for e in out:
                u = u - (e @ u) * e
        n = float(np.linalg.norm(u))
        if n <= tol.bound(start) or n == 0.0:
            continue
        out.append(u / n)
    return out


def nullspace(m: np.ndarray, tol: Tolerance = DEFAULT_TOL, scale: float | None = None) -> list[np.ndarray]:
    """Orthonormal basis of ``{v : m v = 0}``; empty for full column rank."""
    r, pivots = rref(m, tol, scale=scale)
    n = r.shape[1]
    free = [c for c in range(n) if c not in pivots]
    raw = []
    for f in free:
        v = np.zeros(n)
        v[f] = 1.0
        for row, pc in enumerate(pivots):
            v[pc] = -r[row, f]
        raw.append(v)
    return orthonormalize(raw, tol)


@dataclass(frozen=True)
class Solution:
    x: np.ndarray


@dataclass(frozen=True)
class Inconsistent:
    residual: float


def solve_or_refute(
    m: np.ndarray, rhs, tol: Tolerance = DEFAULT_TOL, scale: float | None = None
) -> Solution | Inconsistent:
    """Solve ``m x = rhs`` or report the least achievable residual.

    The system is consistent when the component of ``rhs`` orthogonal to
    the range of ``m`` is within ``tol`` at the scale of ``|rhs|``.  A
    consistent system returns the particular solution with free variables
    set to zero.  ``scale`` is passed on to :func:`rref`.
    """
    m = np.asarray(m, dtype=float)
    rhs = np.asarray(rhs, dtype=float)
    left_null = nullspace(m.T, tol, scale)
    residual = float(np.linalg.norm([e @ rhs for e in left_null])) if left_null else 0.0
    if not tol.small(residual, float(np.linalg.norm(rhs))):
        return Inconsistent(residual)
    r, pivots = rref(np.column_stack([m, rhs]), tol, ncols=m.shape[1], scale=scale)
    x = np.zeros(m.shape[1])
    for row, pc in enumerate(pivots):
        x[pc] = r[row, -1]
    return Solution(x)
