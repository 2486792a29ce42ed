"""Quaternion square roots.

A nonzero quaternion that is nonreal or a positive real has exactly two
square roots ``±sqrt|a| * p/|p|`` with ``p = a + |a|``.  A negative real has
a whole sphere of pure roots of norm ``sqrt|a|``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from qsylv.quat import (
    DEFAULT_TOL,
    I,
    DomainError,
    Quaternion,
    Tolerance,
    conj,
    is_real,
    mul,
    norm,
)

__all__ = [
    "RootKind",
    "RootSet",
    "LinearFormCoeffs",
    "ZeroInput",
    "sqrt",
    "sqrt_product",
    "linear_form",
]


class ZeroInput(DomainError):
    pass


class RootKind(enum.Enum):
    PAIR = "PairRoots"
    PURE_SPHERE = "PureSphere"


@dataclass(frozen=True)
class RootSet:
    """Square roots of a quaternion.

    For ``PAIR`` the roots are ``principal`` and ``-principal``.  For
    ``PURE_SPHERE`` every pure quaternion of norm ``radius`` is a root and
    ``principal`` is ``radius * i``.
    """

    kind: RootKind
    principal: Quaternion
    radius: float | None = None

    @property
    def roots(self) -> tuple[Quaternion, Quaternion]:
        """The ± pair (for a sphere: the two roots on the i axis)."""
        return (self.principal, -self.principal)

    def member(self, direction: Quaternion) -> Quaternion:
        """Root of a ``PURE_SPHERE`` along the pure ``direction``."""
        if self.kind is not RootKind.PURE_SPHERE:
            raise DomainError("only a sphere of roots has members beyond ±principal")
        d = Quaternion(0.0, direction.x, direction.y, direction.z)
        n = norm(d)
        if n == 0.0:
            raise DomainError("direction must have a nonzero imaginary part")
        return d * (self.radius / n)


@dataclass(frozen=True)
class LinearFormCoeffs:
    lambda0: float
    lambda1: float


def _shifted(a: Quaternion, n: float) -> Quaternion:
    # a + |a| with the scalar part formed without cancellation when Re a < 0
    if a.w >= 0.0:
        w = a.w + n
    else:
        w = (a.x * a.x + a.y * a.y + a.z * a.z) / (n - a.w)
    return Quaternion(w, a.x, a.y, a.z)


def _canonical(r: Quaternion) -> Quaternion:
    return -r if r.w < 0.0 else r


def sqrt(a: Quaternion, tol: Tolerance = DEFAULT_TOL) -> RootSet:
    n = norm(a)
    if tol.small(n, 0.0):
        raise ZeroInput(f"square root of the (near-)zero quaternion {a} is not defined here")
    if a.w < 0.0 and is_real(a, tol):
        radius = math.sqrt(n)
        return RootSet(RootKind.PURE_SPHERE, radius * I, radius)
    p = _shifted(a, n)
    r = p * (math.sqrt(n) / norm(p))
    return RootSet(RootKind.PAIR, _canonical(r))


def sqrt_product(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> RootSet:
    """Square roots of ``ab`` for ``|a| = |b|`` via ``a(b + a*)/|b + a*|``."""
    na, nb = norm(a), norm(b)
    if not tol.close(na, nb):
        raise DomainError(f"norms differ: |a| = {na!r}, |b| = {nb!r}")
    if is_real(mul(a, b), tol):
        raise DomainError(f"the product of {a} and {b} is real")
    s = b + conj(a)
    r = mul(a, s) / norm(s)
    return RootSet(RootKind.PAIR, _canonical(r))


def linear_form(a: Quaternion, tol: Tolerance = DEFAULT_TOL) -> LinearFormCoeffs:
    """Coefficients with ``sqrt(a) = ±(lambda0 + lambda1 * a)`` for nonreal ``a``."""
    if is_real(a, tol):
        raise DomainError(f"{a} is real; its roots have no nondegenerate linear form")
    n = norm(a)
    lam1 = math.sqrt(n) / norm(_shifted(a, n))
    return LinearFormCoeffs(lam1 * n, lam1)
