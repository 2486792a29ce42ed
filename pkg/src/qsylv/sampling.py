"""Random test instances for every regime.

All generators take a :class:`numpy.random.Generator` so that runs are
reproducible from a seed.
"""

from __future__ import annotations

import numpy as np

from qsylv.quat import Quaternion, conj, inv, mul
from qsylv.sylvester import SylvesterProblem

REGIMES = (
    "regular",
    "similar",
    "similar-solvable",
    "similar-homogeneous",
    "equal",
    "conjugate",
    "real-equal",
    "real-distinct",
    "real-mixed",
)


def quaternion(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    return Quaternion.from_vec(rng.standard_normal(4) * scale)


def log_scaled(rng: np.random.Generator, decades: float = 2.0) -> Quaternion:
    """Gaussian direction with norm spread over ``10**±decades``."""
    return quaternion(rng, 10.0 ** rng.uniform(-decades, decades))


def pure(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    v = rng.standard_normal(3) * scale
    return Quaternion(0.0, *v)


def real(rng: np.random.Generator, scale: float = 1.0) -> Quaternion:
    return Quaternion(float(rng.standard_normal() * scale))


def nonzero(rng: np.random.Generator) -> Quaternion:
    while True:
        q = quaternion(rng)
        if sum(v * v for v in q) > 1e-6:
            return q


def similar_pair(rng: np.random.Generator) -> tuple[Quaternion, Quaternion]:
    """``(a, p^-1 a p)`` with random ``a`` and nonzero ``p``."""
    a = log_scaled(rng, 1.0)
    p = nonzero(rng)
    return a, mul(mul(inv(p), a), p)


def near_parallel(rng: np.random.Generator) -> tuple[Quaternion, Quaternion]:
    """Pairs whose imaginary parts are exactly or almost parallel.

    The perturbation is orthogonal to ``Im a`` and makes ``|Im a x Im b|``
    either 0 or at least ``1e-7 |a| |b|``, so the answer to "do they
    commute" is never within rounding of the threshold, whatever the real
    parts are.
    """
    a = quaternion(rng)
    lam = float(rng.uniform(-3.0, 3.0)) or 1.0
    b = Quaternion(float(rng.standard_normal()), lam * a.x, lam * a.y, lam * a.z)
    if rng.random() < 0.5:
        eps = 10.0 ** rng.uniform(-7.0, -2.0)
        ia = np.array([a.x, a.y, a.z])
        d = np.cross(ia, rng.standard_normal(3))
        na = float(np.linalg.norm(ia))
        size = eps * float(np.linalg.norm(a.vec())) * float(np.linalg.norm(b.vec())) / na
        b = b + Quaternion(0.0, *(d * (size / float(np.linalg.norm(d)))))
    return a, b


def problem(rng: np.random.Generator, regime: str) -> SylvesterProblem:
    if regime == "regular":
        return SylvesterProblem(log_scaled(rng), log_scaled(rng), log_scaled(rng))
    if regime in ("similar", "similar-solvable", "similar-homogeneous"):
        a, b = similar_pair(rng)
    elif regime == "equal":
        a = log_scaled(rng, 1.0)
        b = a
    elif regime == "conjugate":
        a = log_scaled(rng, 1.0)
        b = conj(a)
    elif regime == "real-equal":
        a = real(rng, 3.0)
        b = a
    elif regime == "real-distinct":
        a, b = real(rng, 3.0), real(rng, 3.0)
    elif regime == "real-mixed":
        a, b = real(rng, 3.0), quaternion(rng)
        if rng.random() < 0.5:
            a, b = b, a
    else:
        raise ValueError(f"unknown regime {regime!r}")

    if regime == "similar-homogeneous" or (regime == "real-equal" and rng.random() < 0.5):
        c = Quaternion()
    elif regime in ("similar-solvable", "equal", "conjugate") and rng.random() < 0.8:
        x0 = quaternion(rng)
        c = mul(a, x0) - mul(x0, b)
    else:
        c = quaternion(rng)
    return SylvesterProblem(a, b, c)
