import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from maxcomm.dmat import (
    DMat,
    builders,
    corner,
    diag,
    elementary,
    flatten,
    from_rows,
    identity,
    intersect_rowspaces,
    jordan_nilpotent,
    kernel_image,
    mat_inv,
    mat_mul,
    mat_op,
    mat_pow,
    min_poly_over_Z,
    poly_eval,
    rank,
    row_reduce,
    row_space,
    scale_left,
    unflatten,
    zeros,
)
from maxcomm.errors import (
    DomainMismatch,
    IndexOutOfRange,
    LengthMismatch,
    ShapeMismatch,
    Singular,
)
from maxcomm.scalars import HQ, QQ, F, d_inv

from conftest import DOMAINS, DOMAIN_IDS, matrices, rand_elem, rand_mat


def rank2_oracle(A):
    """Rank of a 2x2 matrix over D by left proportionality of its rows."""
    r1, r2 = A.entries
    if all(x.is_zero() for x in r1 + r2):
        return 0
    if all(x.is_zero() for x in r1) or all(x.is_zero() for x in r2):
        return 1
    t = 0 if not r1[0].is_zero() else 1
    c = r2[t] * d_inv(A.domain, r1[t])
    return 1 if all(c * x == y for x, y in zip(r1, r2)) else 2


def test_builders():
    assert jordan_nilpotent(F(2), 2) == from_rows(F(2), [[0, 1], [0, 0]])
    assert corner(HQ, 3) == elementary(HQ, 3, 1, 3)
    assert jordan_nilpotent(QQ, 1) == zeros(QQ, 1)
    assert builders(QQ, 2, "identity") == identity(QQ, 2)
    assert builders(QQ, 3, "elementary", 2, 3) == elementary(QQ, 3, 2, 3)
    with pytest.raises(IndexOutOfRange):
        elementary(QQ, 2, 3, 1)


def test_mat_op_examples():
    N = jordan_nilpotent(QQ, 3)
    M = corner(QQ, 3)
    assert mat_op("pow", N, k=2) == M
    assert (N * M).is_zero() and (M * N).is_zero()
    iN = scale_left(HQ.gen("i"), jordan_nilpotent(HQ, 2))
    assert mat_pow(iN, 2).is_zero()
    assert mat_op("neg", N) == -N
    with pytest.raises(ShapeMismatch):
        N + identity(QQ, 2)
    with pytest.raises(DomainMismatch):
        identity(QQ, 2) * identity(F(2), 2)


def test_rank_examples():
    assert rank(jordan_nilpotent(QQ, 3)) == 2
    assert rank(corner(HQ, 3)) == 1
    i, j, k = (HQ.gen(s) for s in "ijk")
    A = DMat(HQ, [[i, j], [k, HQ.scalar(-1)]])
    # a left multiple c*(i, j) = (k, -1) forces c = k i^-1 = -j, but then c*j = 1
    assert rank2_oracle(A) == 2
    assert rank(A) == 2


def test_rank_quaternion_rank_one_sample():
    i, j = HQ.gen("i"), HQ.gen("j")
    c = HQ.elem([1, 2, 0, -1])
    A = DMat(HQ, [[i, j], [c * i, c * j]])
    assert rank2_oracle(A) == 1 == rank(A)


@given(st.integers(0, 2 ** 32), st.sampled_from(DOMAINS))
def test_rank_agrees_with_proportionality_oracle(seed, dom):
    rng = random.Random(seed)
    A = rand_mat(dom, 2, rng, zero_prob=0.3)
    if rng.random() < 0.5:
        c = rand_elem(dom, rng)
        A = DMat(dom, [A.entries[0], [c * x for x in A.entries[0]]])
    assert rank(A) == rank2_oracle(A)


def test_kernel_image_examples():
    one, z = QQ.one(), QQ.zero()
    ker, im = kernel_image(diag(QQ, [one, z]))
    assert ker.basis == ((z, one),) and im.basis == ((one, z),)
    N = jordan_nilpotent(QQ, 3)
    ker, im = kernel_image(N)
    assert (ker.dim, im.dim) == (1, 2)
    assert intersect_rowspaces(ker, im).dim == 1
    ker, im = kernel_image(identity(HQ, 3))
    assert ker.dim == 0 and im.dim == 3


def test_mat_inv_examples():
    A = identity(F(2), 2) + jordan_nilpotent(F(2), 2)
    assert mat_inv(A) == A
    i, j = HQ.gen("i"), HQ.gen("j")
    assert mat_inv(diag(HQ, [i, j])) == diag(HQ, [-i, -j])
    with pytest.raises(Singular):
        mat_inv(elementary(QQ, 2, 1, 2))


def test_flatten_examples():
    assert flatten(identity(F(2), 2)) == (1, 0, 0, 1)
    assert flatten(scale_left(HQ.gen("i"), identity(HQ, 1))) == (0, 1, 0, 0)
    with pytest.raises(LengthMismatch):
        unflatten((1, 0, 0), F(2), 2)


def test_min_poly_examples():
    assert min_poly_over_Z(jordan_nilpotent(QQ, 3)) == [0, 0, 0, 1]
    one, z = F(2).one(), F(2).zero()
    assert min_poly_over_Z(diag(F(2), [one, z])) == [0, 1, 1]
    assert min_poly_over_Z(scale_left(HQ.gen("i"), identity(HQ, 1))) == [1, 0, 1]


@settings(max_examples=150)
@given(matrices())
def test_flatten_round_trip(A):
    assert unflatten(flatten(A), A.domain, A.n) == A


@settings(max_examples=150)
@given(matrices())
def test_rank_nullity(A):
    ker, im = kernel_image(A)
    assert ker.dim + im.dim == A.n == ker.dim + rank(A)
    for v in ker.basis:
        row = DMat(A.domain, [v] + [[A.domain.zero()] * A.n] * (A.n - 1))
        assert (row * A).is_zero()


@settings(max_examples=100)
@given(st.integers(0, 2 ** 32), st.sampled_from(DOMAINS), st.integers(1, 3))
def test_rank_is_submultiplicative_and_powers_decrease(seed, dom, n):
    rng = random.Random(seed)
    A = rand_mat(dom, n, rng, zero_prob=0.5)
    B = rand_mat(dom, n, rng, zero_prob=0.5)
    assert rank(A * B) <= min(rank(A), rank(B))
    ranks = [rank(mat_pow(A, k)) for k in range(n + 2)]
    assert all(x >= y for x, y in zip(ranks, ranks[1:]))


@settings(max_examples=100)
@given(matrices())
def test_row_reduce_is_idempotent(A):
    space, r = row_reduce(A)
    again = row_space(A.domain, A.n, space.basis)
    assert again == space
    for row, c in zip(space.basis, space.pivots):
        assert row[c] == A.domain.one()
    assert list(space.pivots) == sorted(set(space.pivots))


@settings(max_examples=150)
@given(matrices())
def test_inverse_is_two_sided(A):
    if rank(A) < A.n:
        with pytest.raises(Singular):
            mat_inv(A)
        return
    B = mat_inv(A)
    I = identity(A.domain, A.n)
    assert A * B == I and B * A == I


@settings(max_examples=60)
@given(matrices(max_n=3))
def test_min_poly_annihilates(A):
    f = min_poly_over_Z(A)
    assert f[-1] == 1
    assert poly_eval(f, A).is_zero()
    # no monic polynomial of lower degree: the lower powers are independent
    from maxcomm.centralizer import span

    powers = [mat_pow(A, k) for k in range(len(f) - 1)]
    assert span(A.domain, A.n, powers).dimZ == len(f) - 1
