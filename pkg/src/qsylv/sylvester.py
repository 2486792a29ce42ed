"""Closed-form solution sets of the quaternion Sylvester equation ``a x - x b = c``.

Regimes, decided by :func:`classify`:

``REGULAR``
    ``x -> a x - x b`` is invertible; one solution for every ``c``.
``SINGULAR_NONREAL``
    ``a``, ``b`` nonreal and similar; solutions form a 2-dimensional affine
    family (or nothing) and only the imaginary parts of ``a``, ``b`` matter.
``REAL_EQUAL``
    ``a = b`` real; every ``x`` solves the homogeneous equation and nothing
    solves ``c != 0``.
``REAL_DISTINCT``
    both real, unequal; ``x = c / (a - b)``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field

from qsylv import oracle
from qsylv.quat import (
    DEFAULT_TOL,
    I,
    J,
    K,
    ONE,
    ZERO,
    DomainError,
    Quaternion,
    Tolerance,
    conj,
    cross_im,
    im,
    inv,
    is_real,
    is_similar,
    mul,
    norm,
)
from qsylv.roots import sqrt, sqrt_product

__all__ = [
    "Classification",
    "SolutionKind",
    "SolutionSet",
    "SylvesterProblem",
    "classify",
    "reduce_to_pure",
    "solve_regular",
    "homogeneous_general",
    "homogeneous_basis",
    "inhomogeneous_solvable",
    "inhomogeneous_general",
    "inhomogeneous_solution_set",
    "solve",
    "residual",
    "residual_scale",
]

logger = logging.getLogger(__name__)


class Classification(enum.Enum):
    REGULAR = "Regular"
    SINGULAR_NONREAL = "SingularNonreal"
    REAL_EQUAL = "RealEqual"
    REAL_DISTINCT = "RealDistinct"


class SolutionKind(enum.Enum):
    EMPTY = "Empty"
    UNIQUE = "Unique"
    AFFINE = "Affine"


@dataclass(frozen=True)
class SylvesterProblem:
    a: Quaternion
    b: Quaternion
    c: Quaternion = ZERO


@dataclass(frozen=True)
class SolutionSet:
    """``particular + span(basis)``, a single point, or nothing.

    ``basis`` is orthonormal in the component inner product.  ``note``
    carries a human-readable reason for empty sets and fallbacks.
    """

    kind: SolutionKind
    particular: Quaternion | None = None
    basis: tuple[Quaternion, ...] = field(default_factory=tuple)
    note: str | None = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, coeffs=()) -> Quaternion:
        if self.kind is SolutionKind.EMPTY:
            raise DomainError("an empty solution set has no points")
        coeffs = tuple(coeffs)
        if coeffs and len(coeffs) != len(self.basis):
            raise ValueError(f"expected {len(self.basis)} coefficients, got {len(coeffs)}")
        x = self.particular
        for t, e in zip(coeffs, self.basis):
            x = x + t * e
        return x


def residual(p: SylvesterProblem, x: Quaternion) -> float:
    """``|a x - x b - c|``."""
    return norm(mul(p.a, x) - mul(x, p.b) - p.c)


def residual_scale(p: SylvesterProblem, x: Quaternion) -> float:
    return norm(p.a) * norm(x) + norm(p.c)


def classify(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> Classification:
    ra, rb = is_real(a, tol), is_real(b, tol)
    if ra and rb:
        if tol.small(norm(a - b), max(norm(a), norm(b))):
            return Classification.REAL_EQUAL
        return Classification.REAL_DISTINCT
    if ra or rb:
        return Classification.REGULAR
    if is_similar(a, b, tol):
        return Classification.SINGULAR_NONREAL
    return Classification.REGULAR


def _require(p_or_ab, allowed, tol, what):
    cls = classify(p_or_ab[0], p_or_ab[1], tol)
    if cls not in allowed:
        names = ", ".join(c.value for c in allowed)
        raise DomainError(f"{what} needs a {names} problem, got {cls.value}")
    return cls


def reduce_to_pure(p: SylvesterProblem, tol: Tolerance = DEFAULT_TOL) -> SylvesterProblem:
    """Drop the (equal) real parts of ``a`` and ``b``; the solutions do not change."""
    _require((p.a, p.b), {Classification.SINGULAR_NONREAL}, tol, "reduce_to_pure")
    return SylvesterProblem(im(p.a), im(p.b), p.c)


def solve_regular(p: SylvesterProblem, tol: Tolerance = DEFAULT_TOL) -> SolutionSet:
    """Unique solution ``(a^2 - 2 Re(b) a + |b|^2)^-1 (a c - c b*)``.

    Multiplying ``a x - x b`` on the right-operator side by ``x -> a x - x b*``
    turns it into left multiplication by the scalar polynomial in ``a``,
    which is invertible exactly when the equation is regular.
    """
    _require((p.a, p.b), {Classification.REGULAR}, tol, "solve_regular")
    a, b, c = p.a, p.b, p.c
    nb = norm(b)
    poly = mul(a, a) - (2.0 * b.w) * a + nb * nb
    rhs = mul(a, c) - mul(c, conj(b))
    return SolutionSet(SolutionKind.UNIQUE, mul(inv(poly, tol), rhs))


def homogeneous_general(
    a: Quaternion, b: Quaternion, q: Quaternion, tol: Tolerance = DEFAULT_TOL
) -> Quaternion:
    """``x = (Im a) q + q (Im b)``; every ``q`` gives a homogeneous solution."""
    _require((a, b), {Classification.SINGULAR_NONREAL}, tol, "homogeneous_general")
    return mul(im(a), q) + mul(q, im(b))


def _gram_schmidt(vectors, tol: Tolerance) -> list[Quaternion] | None:
    """Orthonormalize in order; ``None`` if any vector is dependent on the previous ones."""
    out: list[Quaternion] = []
    for v in vectors:
        start = norm(v)
        u = v
        for e in out:
            u = u - _dot4(e, u) * e
        n = norm(u)
        if tol.small(n, start) or n == 0.0:
            return None
        out.append(u / n)
    return out


def _dot4(p: Quaternion, q: Quaternion) -> float:
    return p.w * q.w + p.x * q.x + p.y * q.y + p.z * q.z


def _perp_plane(v: Quaternion) -> list[Quaternion]:
    """Orthonormal pure pair spanning the plane of pure quaternions orthogonal to ``v``."""
    best = max((I, J, K), key=lambda e: norm(cross_im(v, e)))
    u1 = cross_im(v, best)
    u1 = u1 / norm(u1)
    u2 = cross_im(v, u1)
    return [u1, u2 / norm(u2)]


def _oracle_basis(a: Quaternion, b: Quaternion, tol: Tolerance) -> list[Quaternion]:
    m = oracle.sylvester_matrix(a, b)
    return [Quaternion.from_vec(v) for v in oracle.nullspace(m, tol, oracle.operator_scale(a, b))]


def homogeneous_basis(a: Quaternion, b: Quaternion, tol: Tolerance = DEFAULT_TOL) -> SolutionSet:
    """All solutions of ``a x = x b`` as ``span(basis)``.

    For similar nonreal ``a``, ``b`` the span is generated by
    ``sqrt((Im a)(Im b)*)`` and ``Im(a + b)``.  When ``Im a = -Im b`` both
    generators degenerate and the solutions are instead the pure quaternions
    orthogonal to ``Im a``.
    """
    cls = _require(
        (a, b),
        {Classification.SINGULAR_NONREAL, Classification.REAL_EQUAL},
        tol,
        "homogeneous_basis",
    )
    if cls is Classification.REAL_EQUAL:
        return SolutionSet(SolutionKind.AFFINE, ZERO, (ONE, I, J, K))

    ia, ib = im(a), im(b)
    total = ia + ib
    scale = max(norm(ia), norm(ib))
    if tol.small(norm(total), scale):
        return SolutionSet(SolutionKind.AFFINE, ZERO, tuple(_perp_plane(ia)))

    prod = mul(ia, conj(ib))
    if is_real(prod, tol):
        if prod.w < 0.0:
            # cancellation just above the threshold above; same geometry
            return SolutionSet(SolutionKind.AFFINE, ZERO, tuple(_perp_plane(ia)))
        root = sqrt(prod, tol).principal
    else:
        root = sqrt_product(ia, conj(ib), tol).principal

    basis = _gram_schmidt([root, total], tol)
    if basis is None:
        logger.warning("closed-form generators are dependent for a=%s b=%s; using elimination", a, b)
        return SolutionSet(
            SolutionKind.AFFINE,
            ZERO,
            tuple(_oracle_basis(a, b, tol)),
            note="closed-form generators degenerate; basis from real elimination",
        )
    return SolutionSet(SolutionKind.AFFINE, ZERO, tuple(basis))


def _c_is_zero(c: Quaternion, tol: Tolerance) -> bool:
    return tol.small(norm(c), 0.0)


def inhomogeneous_solvable(p: SylvesterProblem, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Solvability of a singular equation: ``a c = c b*``."""
    cls = _require(
        (p.a, p.b),
        {Classification.SINGULAR_NONREAL, Classification.REAL_EQUAL},
        tol,
        "inhomogeneous_solvable",
    )
    if _c_is_zero(p.c, tol):
        raise DomainError("inhomogeneous_solvable needs c != 0")
    if cls is Classification.REAL_EQUAL:
        return False
    gap = norm(mul(p.a, p.c) - mul(p.c, conj(p.b)))
    return tol.small(gap, norm(p.a) * norm(p.c))


def inhomogeneous_general(
    p: SylvesterProblem, q: Quaternion, tol: Tolerance = DEFAULT_TOL
) -> Quaternion:
    """``x = (Im a)(q - c)/(4|Im a|^2) + (q + c)(Im b)/(4|Im b|^2)`` for any ``q``."""
    _require((p.a, p.b), {Classification.SINGULAR_NONREAL}, tol, "inhomogeneous_general")
    if not _c_is_zero(p.c, tol) and not inhomogeneous_solvable(p, tol):
        raise DomainError("a c != c b*: the equation has no solution")
    ia, ib = im(p.a), im(p.b)
    na2 = 4.0 * _dot4(ia, ia)
    nb2 = 4.0 * _dot4(ib, ib)
    return mul(ia, q - p.c) / na2 + mul(q + p.c, ib) / nb2


def _condition_note(p: SylvesterProblem) -> str:
    from qsylv.text import format_quaternion

    lhs = mul(p.a, p.c)
    rhs = mul(p.c, conj(p.b))
    return (
        "no solution: a c = c b* fails "
        f"(a c = {format_quaternion(lhs, 12)}, c b* = {format_quaternion(rhs, 12)})"
    )


def inhomogeneous_solution_set(p: SylvesterProblem, tol: Tolerance = DEFAULT_TOL) -> SolutionSet:
    """Every solution of a singular equation, or ``EMPTY``.

    The particular solution is ``c Im(b - a)/(4|Im a|^2)`` when that point
    actually solves the equation (it does when ``Im a = -Im b``); otherwise
    the general formula at ``q = 0`` is used.
    """
    cls = _require(
        (p.a, p.b),
        {Classification.SINGULAR_NONREAL, Classification.REAL_EQUAL},
        tol,
        "inhomogeneous_solution_set",
    )
    if _c_is_zero(p.c, tol):
        return homogeneous_basis(p.a, p.b, tol)
    if cls is Classification.REAL_EQUAL:
        return SolutionSet(
            SolutionKind.EMPTY,
            note="no solution: real equal coefficients give (a - b) x = 0 for every x, but c != 0",
        )
    if not inhomogeneous_solvable(p, tol):
        return SolutionSet(SolutionKind.EMPTY, note=_condition_note(p))

    ia, ib = im(p.a), im(p.b)
    x = mul(p.c, ib - ia) / (4.0 * _dot4(ia, ia))
    if not tol.small(residual(p, x), residual_scale(p, x)):
        x = inhomogeneous_general(p, ZERO, tol)
    basis = homogeneous_basis(p.a, p.b, tol)
    return SolutionSet(SolutionKind.AFFINE, x, basis.basis, note=basis.note)


def solve(p: SylvesterProblem, tol: Tolerance = DEFAULT_TOL) -> tuple[Classification, SolutionSet]:
    """Classify and solve in one call."""
    cls = classify(p.a, p.b, tol)
    if cls is Classification.REGULAR:
        return cls, solve_regular(p, tol)
    if cls is Classification.REAL_DISTINCT:
        # adding ZERO clears the -0.0 components a negative divisor leaves behind
        return cls, SolutionSet(SolutionKind.UNIQUE, p.c / (p.a.w - p.b.w) + ZERO)
    return cls, inhomogeneous_solution_set(p, tol)
