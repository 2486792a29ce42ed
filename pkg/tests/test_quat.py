import math

import numpy as np
import pytest
from hypothesis import assume, given

from conftest import pure_quaternions, qclose, quaternions
from oracles import table_mul
from qsylv import sampling
from qsylv.quat import (
    DEFAULT_TOL,
    I,
    J,
    K,
    ONE,
    ZERO,
    DivisionByZero,
    DomainError,
    Quaternion,
    Tolerance,
    anticommutes,
    commutes,
    conj,
    cross_im,
    dot_im,
    im,
    inv,
    is_real,
    is_similar,
    mul,
    norm,
    re,
    similarity_witness,
)

Q = Quaternion


def test_table_oracle_matches_unit_relations():
    # ij = -ji = k, jk = -kj = i, ki = -ik = j, i^2 = j^2 = k^2 = ijk = -1
    i, j, k = (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)
    assert table_mul(i, j) == (0, 0, 0, 1) and table_mul(j, i) == (0, 0, 0, -1)
    assert table_mul(j, k) == (0, 1, 0, 0) and table_mul(k, j) == (0, -1, 0, 0)
    assert table_mul(k, i) == (0, 0, 1, 0) and table_mul(i, k) == (0, 0, -1, 0)
    for u in (i, j, k):
        assert table_mul(u, u) == (-1, 0, 0, 0)
    assert table_mul(table_mul(i, j), k) == (-1, 0, 0, 0)


class TestArithmetic:
    def test_ij_is_k(self):
        assert mul(I, J) == K
        assert mul(J, I) == -K

    def test_identity(self):
        a = Q(0.3, -1.5, 2.0, 7.0)
        assert mul(a, ONE) == a
        assert mul(ONE, a) == a

    def test_one_plus_i_times_one_minus_i(self):
        assert mul(Q(1, 1), Q(1, -1)) == Q(2)

    def test_conj_norm_inv(self):
        assert conj(Q(1, 1, 1, 1)) == Q(1, -1, -1, -1)
        assert norm(Q(1, 1, 1, 1)) == 2.0
        assert inv(Q(0, 2)) == Q(0, -0.5)
        assert mul(Q(0, 2), inv(Q(0, 2))) == ONE

    def test_parts(self):
        a = Q(1.5, 2, -3, 4)
        assert re(a) == 1.5
        assert im(a) == Q(0, 2, -3, 4)
        assert dot_im(a, Q(9, 1, 1, 1)) == 3.0
        assert cross_im(I, J) == K

    def test_inv_of_zero_names_operand(self):
        with pytest.raises(DivisionByZero, match="zero quaternion"):
            inv(Q(1e-20))

    @pytest.mark.parametrize("bad", [math.inf, -math.inf, math.nan])
    def test_nonfinite_rejected(self, bad):
        with pytest.raises(ValueError, match="not finite"):
            Q(0, bad)

    def test_ints_coerced(self):
        q = Q(1, 2, 3, 4)
        assert all(type(v) is float for v in q)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            I.w = 3.0


class TestTolerance:
    def test_defaults(self):
        assert DEFAULT_TOL == Tolerance(1e-10, 1e-14)

    def test_rule(self):
        t = Tolerance(1e-3, 0.0)
        assert t.close(1000.0, 1000.9)
        assert not t.close(1000.0, 1001.1)

    @pytest.mark.parametrize("rel, abs_", [(0.0, 0.0), (-1.0, 0.0), (1e-3, -1.0), (math.nan, 0.0)])
    def test_invalid(self, rel, abs_):
        with pytest.raises(ValueError):
            Tolerance(rel, abs_)


@given(quaternions(), quaternions())
def test_mul_matches_table_oracle(a, b):
    scale = norm(a) * norm(b)
    assert qclose(mul(a, b), table_mul(a, b), 1e-13 * scale + 1e-300)


@given(quaternions(), quaternions(), quaternions())
def test_mul_associative(a, b, c):
    scale = norm(a) * norm(b) * norm(c)
    assert qclose(mul(mul(a, b), c), mul(a, mul(b, c)), 1e-13 * scale + 1e-300)


@given(quaternions(), quaternions())
def test_norm_multiplicative(a, b):
    assert abs(norm(mul(a, b)) - norm(a) * norm(b)) <= 1e-13 * norm(a) * norm(b) + 1e-300


@given(quaternions(), quaternions())
def test_trace_symmetry(a, b):
    assert abs(re(mul(a, b)) - re(mul(b, a))) <= 1e-13 * norm(a) * norm(b) + 1e-300


@given(pure_quaternions(), pure_quaternions())
def test_pure_product_identity(a, b):
    expected = Quaternion(-dot_im(a, b)) + cross_im(a, b)
    assert qclose(mul(a, b), expected, 1e-13 * norm(a) * norm(b) + 1e-300)


@given(quaternions())
def test_conj_times_self_is_norm_squared(a):
    n2 = norm(a) ** 2
    assert qclose(mul(conj(a), a), (n2, 0, 0, 0), 1e-13 * n2 + 1e-300)


@given(pure_quaternions(min_norm=1e-3), pure_quaternions(min_norm=1e-3))
def test_cross_product_sum_identity(a, b):
    # rescale b to the norm of a, then a(a x b) + (a x b)b = (a.(b - a))(a + b)
    b = b * (norm(a) / norm(b))
    axb = cross_im(a, b)
    lhs = mul(a, axb) + mul(axb, b)
    rhs = (a + b) * dot_im(a, b - a)
    assert qclose(lhs, rhs, 1e-12 * norm(a) ** 3)


class TestCrossProductSumZero:
    """The cross-product sum vanishes exactly for commuting equal-norm pure pairs."""

    def test_parallel_and_antiparallel(self):
        for a in (I, Q(0, 1, -2, 0.5)):
            for b in (a, -a):
                axb = cross_im(a, b)
                lhs = mul(a, axb) + mul(axb, b)
                assert norm(lhs) == 0.0
                assert commutes(a, b)

    def test_nonzero_for_noncommuting(self, rng):
        for _ in range(1000):
            a = sampling.pure(rng)
            b = sampling.pure(rng)
            b = b * (norm(a) / norm(b))
            axb = cross_im(a, b)
            lhs = mul(a, axb) + mul(axb, b)
            assert not commutes(a, b)
            assert norm(lhs) > 1e-10 * norm(a) ** 3


class TestCommutation:
    def test_examples(self):
        assert commutes(I, Q(0, 2))
        assert not commutes(I, J)
        assert commutes(Q(1, 1), Q(3, -2))
        assert mul(Q(1, 1), Q(3, -2)) == mul(Q(3, -2), Q(1, 1))

    def test_real_always_commutes(self):
        assert commutes(Q(2), Q(1, 2, 3, 4))

    def test_anticommute_examples(self):
        assert anticommutes(I, J)
        assert not anticommutes(I, I)
        assert not anticommutes(Q(1, 1), J)

    def test_anticommute_rejects_real(self):
        with pytest.raises(DomainError):
            anticommutes(Q(3), I)

    def test_agrees_with_direct_evaluation(self, rng):
        tol = DEFAULT_TOL
        for _ in range(5000):
            a, b = sampling.near_parallel(rng) if rng.random() < 0.5 else (sampling.quaternion(rng), sampling.quaternion(rng))
            direct = tol.small(norm(mul(a, b) - mul(b, a)), norm(a) * norm(b))
            assert commutes(a, b, tol) == direct, (a, b)

    def test_anticommute_agrees_with_direct_evaluation(self, rng):
        tol = DEFAULT_TOL
        for _ in range(5000):
            u, v = sampling.pure(rng), sampling.pure(rng)
            if rng.random() < 0.5:
                v = cross_im(u, v)
            if rng.random() < 0.3:
                u = u + float(rng.standard_normal())
            direct = tol.small(norm(mul(u, v) + mul(v, u)), norm(u) * norm(v))
            assert anticommutes(u, v, tol) == direct, (u, v)


class TestSimilarity:
    def test_examples(self):
        assert is_similar(Q(1, 1), Q(1, 0, 1))
        assert not is_similar(I, Q(0, 2))
        assert is_similar(I, -I)

    def test_rejects_real(self):
        with pytest.raises(DomainError, match="real"):
            is_similar(Q(2), I)

    def test_witness_examples(self):
        assert similarity_witness(I, J) == I + J
        assert mul(I, I + J) == mul(I + J, J) == Q(-1, 0, 0, 1)
        assert similarity_witness(I, I) == Q(0, 2)
        p = similarity_witness(I, -I)
        assert p == Q(0, 0, 0, 2)
        assert mul(I, p) == mul(p, -I) == Q(0, 0, -2)

    @pytest.mark.parametrize("gap", [0.0, 1e-13, 1e-9, 4e-8, 1e-6, 1e-3])
    def test_witness_near_opposite_imaginary_parts(self, gap):
        # b = -a rotated by a tiny angle: a p = p b must stay accurate
        c, s = math.cos(gap), math.sin(gap)
        a = Q(0.0, 0.0, 1.0, 0.0)
        b = Q(0.0, 0.0, -c, s)
        p = similarity_witness(a, b)
        assert norm(p) > 1e-4
        assert norm(mul(a, p) - mul(p, b)) <= 1e-10 * norm(a) * norm(p)

    def test_witness_requires_similarity(self):
        with pytest.raises(DomainError):
            similarity_witness(I, Q(0, 2))

    def test_witness_opposite_imaginary_parts_general(self):
        a = Q(0.5, 1.0, -2.0, 0.25)
        b = Q(0.5, -1.0, 2.0, -0.25)
        p = similarity_witness(a, b)
        assert norm(p) > 0
        assert norm(mul(a, p) - mul(p, b)) <= 1e-12 * norm(a) * norm(p)

    def test_witness_soundness_bulk(self, rng):
        tol = DEFAULT_TOL
        for _ in range(100_000):
            a, b = sampling.similar_pair(rng)
            assume_nonreal = not (is_real(a, tol) or is_real(b, tol))
            assert assume_nonreal
            p = similarity_witness(a, b, tol)
            assert norm(p) > 0
            assert norm(mul(a, p) - mul(p, b)) <= tol.rel * norm(a) * norm(p)


@given(quaternions(min_norm=1e-2), quaternions(min_norm=1e-2))
def test_similarity_matches_conjugation(a, p):
    assume(not is_real(a) and norm(im(a)) > 1e-3 * norm(a))
    b = mul(mul(inv(p), a), p)
    assert is_similar(a, b)
    w = similarity_witness(a, b)
    assert norm(mul(a, w) - mul(w, b)) <= 1e-10 * norm(a) * norm(w)
