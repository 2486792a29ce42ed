"""Exact re-derivation of the hard-coded example values used across the suite.

The numeric tests compare against literals; this module checks those
literals with a computer algebra system so a typo cannot hide in both the
code and the expectation.
"""

import pytest

sympy = pytest.importorskip("sympy")
from sympy import Matrix, Rational, simplify, sqrt, symbols  # noqa: E402
from sympy.algebras.quaternion import Quaternion as SQ  # noqa: E402

from oracles import table_mul  # noqa: E402

one, i, j, k = SQ(1, 0, 0, 0), SQ(0, 1, 0, 0), SQ(0, 0, 1, 0), SQ(0, 0, 0, 1)


def parts(q):
    return tuple(simplify(v) for v in (q.a, q.b, q.c, q.d))


def test_table_oracle_agrees_with_cas():
    units = [one, i, j, k]
    for m, u in enumerate(units):
        for n, v in enumerate(units):
            e_m = tuple(int(t == m) for t in range(4))
            e_n = tuple(int(t == n) for t in range(4))
            assert table_mul(e_m, e_n) == tuple(float(t) for t in parts(u * v))


def test_products_and_inverse():
    assert parts((one + i) * (one - i)) == (2, 0, 0, 0)
    assert parts(2 * i * (-i / 2)) == (1, 0, 0, 0)
    assert parts(i * (i + j) - (i + j) * j) == (0, 0, 0, 0)
    assert parts(i * (i + j)) == (-1, 0, 0, 1)


def test_roots():
    assert parts((2 + i) ** 2) == (3, 4, 0, 0)
    r = (one + k) / sqrt(2)
    assert parts(r * r) == parts(i * j)
    r = (one + i) / sqrt(2)
    assert parts(r * r) == (0, 1, 0, 0)
    # linear form of 3 + 4i: lambda1 = sqrt(5)/|8 + 4i| = 1/4, lambda0 = 5/4
    lam1 = sqrt(5) / sqrt(80)
    assert simplify(lam1 - Rational(1, 4)) == 0
    assert parts(5 * lam1 * one + lam1 * (3 * one + 4 * i)) == (2, 1, 0, 0)


def _solve(a, b, c):
    w, x, y, z = symbols("w x y z", real=True)
    X = SQ(w, x, y, z)
    eqs = parts(a * X - X * b - c)
    return sympy.solve(eqs, [w, x, y, z], dict=True)


def test_regular_frozen_value():
    (sol,) = _solve(i, 10 * one + j, k)
    w, x, y, z = symbols("w x y z", real=True)
    assert [sol[v] for v in (w, x, y, z)] == [
        Rational(1, 520),
        Rational(-1, 104),
        Rational(1, 104),
        Rational(-51, 520),
    ]


def test_embeddings_of_i():
    w, x, y, z = symbols("w x y z", real=True)
    X = SQ(w, x, y, z)
    assert parts(i * X) == (-x, w, -z, y)
    assert parts(X * i) == (-x, w, z, -y)


def test_homogeneous_examples():
    for a, b, basis in [
        (i, j, [one - k, i + j]),
        (i, i, [one, i]),
        (i, -i, [j, k]),
    ]:
        for e in basis:
            assert parts(a * e - e * b) == (0, 0, 0, 0)
        # and the solution space is exactly 2-dimensional
        w, x, y, z = symbols("w x y z", real=True)
        X = SQ(w, x, y, z)
        m = Matrix([[sympy.diff(eq, v) for v in (w, x, y, z)] for eq in parts(a * X - X * b)])
        assert m.rank() == 2


def test_inhomogeneous_examples():
    # general formula at q = 0
    assert parts(i * (-2 * i) / 4 + (2 * i) * (-i) / 4) == (1, 0, 0, 0)
    assert parts(i * (-2 * k) / 4 + (2 * k) * i / 4) == (0, 0, 1, 0)
    assert parts(i * one + one * i) == (0, 2, 0, 0)
    assert parts(i * j - j * i) == (0, 0, 0, 2)
    # (i, i, 1) has no solution; the least-squares residual is 1
    w, x, y, z = symbols("w x y z", real=True)
    X = SQ(w, x, y, z)
    r = parts(i * X - X * i - one)
    assert r[0] == -1


def test_witness_examples():
    assert parts(i * (i + j)) == parts((i + j) * j) == (-1, 0, 0, 1)
    assert parts(i * (2 * k)) == parts((2 * k) * (-i)) == (0, 0, -2, 0)
