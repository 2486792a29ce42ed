"""Quaternion arithmetic, tolerance policy and the structural predicates.

Quaternions are stored as ``(w, x, y, z)`` with ``w`` the scalar part.
Everything here is a pure function over immutable values.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import isfinite

__all__ = [
    "Quaternion",
    "Tolerance",
    "DEFAULT_TOL",
    "QuaternionError",
    "DomainError",
    "DivisionByZero",
    "InternalError",
    "ZERO",
    "ONE",
    "I",
    "J",
    "K",
    "mul",
    "conj",
    "re",
    "im",
    "norm",
    "inv",
    "dot_im",
    "cross_im",
    "is_real",
    "commutes",
    "anticommutes",
    "is_similar",
    "similarity_witness",
]


class QuaternionError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(QuaternionError, ValueError):
    """An operation was called outside the domain where it is defined."""


class DivisionByZero(QuaternionError, ZeroDivisionError):
    pass


class InternalError(QuaternionError, RuntimeError):
    """A branch that the mathematics says is unreachable was reached."""


@dataclass(frozen=True, slots=True)
class Tolerance:
    """Mixed relative/absolute comparison policy.

    ``u ~ v`` iff ``|u - v| <= abs + rel * scale`` where ``scale`` defaults
    to ``max(|u|, |v|)``.
    """

    rel: float = 1e-10
    abs: float = 1e-14

    def __post_init__(self):
        if not (self.rel > 0 and math.isfinite(self.rel)):
            raise ValueError(f"rel must be positive and finite, got {self.rel!r}")
        if not (self.abs >= 0 and math.isfinite(self.abs)):
            raise ValueError(f"abs must be non-negative and finite, got {self.abs!r}")

    def bound(self, scale: float) -> float:
        return self.abs + self.rel * scale

    def close(self, u: float, v: float, scale: float | None = None) -> bool:
        if scale is None:
            scale = max(abs(u), abs(v))
        return abs(u - v) <= self.bound(scale)

    def small(self, value: float, scale: float) -> bool:
        """True if a non-negative magnitude is negligible at ``scale``."""
        return value <= self.bound(scale)


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True, slots=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    def __post_init__(self):
        w, x, y, z = self.w, self.x, self.y, self.z
        if not (type(w) is float and type(x) is float and type(y) is float and type(z) is float):
            for name in ("w", "x", "y", "z"):
                object.__setattr__(self, name, float(getattr(self, name)))
            w, x, y, z = self.w, self.x, self.y, self.z
        if not (isfinite(w) and isfinite(x) and isfinite(y) and isfinite(z)):
            bad = next(n for n in ("w", "x", "y", "z") if not isfinite(getattr(self, n)))
            raise ValueError(f"quaternion component {bad} is not finite: {getattr(self, bad)!r}")

    @classmethod
    def from_vec(cls, v) -> Quaternion:
        w, x, y, z = v
        return cls(float(w), float(x), float(y), float(z))

    def vec(self) -> tuple[float, float, float, float]:
        return (self.w, self.x, self.y, self.z)

    def __iter__(self):
        return iter((self.w, self.x, self.y, self.z))

    def __add__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w + other, self.x, self.y, self.z)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, Quaternion):
            return Quaternion(self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z)
        if isinstance(other, (int, float)):
            return Quaternion(self.w - other, self.x, self.y, self.z)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other - self.w, -self.x, -self.y, -self.z)
        return NotImplemented

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        if isinstance(other, Quaternion):
            return mul(self, other)
        if isinstance(other, (int, float)):
            return Quaternion(self.w * other, self.x * other, self.y * other, self.z * other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return Quaternion(other * self.w, other * self.x, other * self.y, other * self.z)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            if other == 0:
                raise DivisionByZero("division of a quaternion by the real number 0")
            return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)
        return NotImplemented

    def __abs__(self):
        return norm(self)

    def __str__(self):
        from qsylv.text import format_quaternion

        return format_quaternion(self)


ZERO = Quaternion(0.0, 0.0, 0.0, 0.0)
ONE = Quaternion(1.0, 0.0, 0.0, 0.0)
I = Quaternion(0.0, 1.0, 0.0, 0.0)
J = Quaternion(0.0, 0.0, 1.0, 0.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)


def mul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product ``ab``.

    Written out as ``Re a Re b - Im a . Im b + Re a Im b + Re b Im a + Im a x Im b``.
    """
    aw, ax, ay, az = a.w, a.x, a.y, a.z
    bw, bx, by, bz = b.w, b.x, b.y, b.z
    return Quaternion(
        aw * bw - (ax * bx + ay * by + az * bz),
        aw * bx + bw * ax + (ay * bz - az * by),
        aw * by + bw * ay + (az * bx - ax * bz),
        aw * bz + bw * az + (ax * by - ay * bx),
    )


def conj(a: Quaternion) -> Quaternion:
    return Quaternion(a.w, -a.x, -a.y, -a.z)


def re(a: Quaternion) -> float:
    return a.w


def im(a: Quaternion) -> Quaternion:
    return Quaternion(0.0, a.x, a.y, a.z)


def norm(a: Quaternion) -> float:
    # hypot rescales, so tiny or huge components do not under/overflow
    return math.hypot(a.w, a.x, a.y, a.z)


def _im_norm(a: Quaternion) -> float:
    return math.hypot(a.x, a.y, a.z)


def inv(a: Quaternion, tol: Tolerance = DEFAULT_TOL) -> Quaternion:
    n = norm(a)
    if tol.small(n, 0.0):
        raise DivisionByZero(f"cannot invert the (near-)zero quaternion {a}")
    n2 = n * n
    return Quaternion(a.w / n2, -a.x / n2, -a.y / n2, -a.z / n2)


def dot_im(a: Quaternion, b: Quaternion) -> float:
    return a.x * b.x + a.y * b.y + a.z * b.z


def cross_im(a: Quaternion, b: Quaternion) -> Quaternion:
    return Quaternion(
        0.0,
        a.y * b.z - a.z * b.y,
        a.z * b.x - a.x * b.z,
        a.x * b.y - a.y * b.x,
    )


def is_real(a: Quaternion, tol: Tolerance = DEFAULT_TOL) -> bool:
    """True when the imaginary part is negligible relative to ``norm(a)``."""
    return tol.small(_im_norm(a), norm(a))


def _require_nonreal(tol: Tolerance, **operands: Quaternion) -> None:
    for name, q in operands.items():
        if is_real(q, tol):
            raise DomainError(f"operand {name} = {q} is real; a nonreal quaternion is required")


def commutes(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether ``ab = ba``, decided through parallelism of the imaginary parts."""
    if is_real(a, tol) or is_real(b, tol):
        return True
    return tol.small(norm(cross_im(a, b)), _im_norm(a) * _im_norm(b))


def anticommutes(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Whether ``ab = -ba``: both pure with orthogonal imaginary parts."""
    _require_nonreal(tol, a=a, b=b)
    na, nb = norm(a), norm(b)
    return (
        tol.small(abs(a.w), na)
        and tol.small(abs(b.w), nb)
        and tol.small(abs(dot_im(a, b)), na * nb)
    )


def is_similar(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Similarity of nonreal quaternions: equal real parts and equal norms.

    Both comparisons are made at the scale ``max(norm(a), norm(b))``.
    """
    _require_nonreal(tol, a=a, b=b)
    na, nb = norm(a), norm(b)
    scale = max(na, nb)
    return tol.close(a.w, b.w, scale) and tol.close(na, nb, scale)


#: below this length relative to |Im a|, Im a + Im b is too short to be an accurate witness
WITNESS_MIN_REL = 1e-4


def similarity_witness(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> Quaternion:
    """Return a nonzero ``p`` with ``a p = p b`` for similar nonreal ``a``, ``b``.

    ``p = Im a + Im b`` whenever that is not (nearly) zero.  Otherwise, in
    particular when ``Im a = -Im b``, ``p = (Im a) q + q (Im b)`` with ``q``
    the axis among i, j, k that makes ``p`` longest (ties go to i, then j).
    In the exact case ``Im b = -Im a`` this is ``(Im a) q - q (Im a)`` with
    ``q`` the axis least parallel to ``Im a``.
    """
    if not is_similar(a, b, tol):
        raise DomainError(f"{a} and {b} are not similar")
    ia, ib = im(a), im(b)
    scale = max(_im_norm(a), _im_norm(b))
    p = ia + ib
    if norm(p) > WITNESS_MIN_REL * scale:
        return p
    best, best_n = p, norm(p)
    for q in (I, J, K):
        cand = mul(ia, q) + mul(q, ib)
        n = norm(cand)
        if n > best_n:
            best, best_n = cand, n
    if tol.small(best_n, scale):
        raise InternalError(f"no witness found for {a} ~ {b}")
    return best
