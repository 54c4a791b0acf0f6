import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from maxcomm.errors import (
    DivisionByZero,
    DomainMismatch,
    NonPrimeModulus,
    SplitAlgebraWitness,
    UnsupportedKind,
)
from maxcomm.scalars import (
    HQ,
    QQ,
    F,
    d_inv,
    d_op,
    make_domain,
    membership,
    norm,
    parse_elem,
    format_elem,
)

from conftest import rand_elem

small_fracs = st.builds(Fraction, st.integers(-10, 10), st.integers(1, 5))
quat_coords = st.lists(small_fracs, min_size=4, max_size=4)


def test_make_domain_prime_field():
    d = make_domain({"kind": "PrimeField", "p": 2})
    assert d == F(2) and d.z_basis_size == 1 and d.l_basis_size == 1


def test_make_domain_quaternions():
    d = make_domain({"kind": "QuaternionAlgebra", "a": -1, "b": -1})
    assert d == HQ and d.z_basis_size == 4 and d.l_basis_size == 2


def test_make_domain_rejects_composite_and_large():
    with pytest.raises(NonPrimeModulus):
        make_domain({"kind": "PrimeField", "p": 4})
    with pytest.raises(UnsupportedKind):
        make_domain({"kind": "PrimeField", "p": 101})
    with pytest.raises(UnsupportedKind):
        make_domain({"kind": "Octonions"})


def test_quaternion_relations():
    i, j, k = HQ.gen("i"), HQ.gen("j"), HQ.gen("k")
    assert d_op(HQ, "mul", i, j) == k
    assert d_op(HQ, "mul", j, i) == -k
    assert i * i == HQ.scalar(-1) and k * k == HQ.scalar(-1)


def test_char_two_addition():
    one = F(2).one()
    assert d_op(F(2), "add", one, one) == F(2).zero()


def test_inverse_examples():
    x = HQ.elem([1, 1, 0, 0])
    assert d_inv(HQ, x) == HQ.elem([Fraction(1, 2), Fraction(-1, 2), 0, 0])
    assert d_inv(F(3), F(3).scalar(2)) == F(3).scalar(2)
    with pytest.raises(DivisionByZero):
        d_inv(QQ, QQ.zero())


def test_split_algebra_witness():
    # H(1,1) is M_2(Q); 1 + i has norm 1 - 1 = 0
    split = make_domain(kind="quat", a=1, b=1)
    with pytest.raises(SplitAlgebraWitness):
        d_inv(split, split.elem([1, 1, 0, 0]))


def test_domain_mismatch():
    with pytest.raises(DomainMismatch):
        F(2).one() + F(3).one()
    with pytest.raises(DomainMismatch):
        d_op(QQ, "add", F(2).one(), F(2).one())


def test_membership_examples():
    i = HQ.gen("i")
    assert not membership(HQ, i, "CenterZ")
    assert membership(HQ, i, "SubfieldL")
    assert not membership(HQ, HQ.gen("j"), "SubfieldL")
    assert all(membership(F(5), F(5).scalar(c), "CenterZ") for c in range(5))


@given(quat_coords, quat_coords)
def test_norm_is_multiplicative(x, y):
    x, y = HQ.elem(x), HQ.elem(y)
    assert norm(x * y) == norm(x) * norm(y)


@given(quat_coords)
def test_inverse_is_two_sided(c):
    x = HQ.elem(c)
    if x.is_zero():
        return
    y = d_inv(HQ, x)
    assert x * y == HQ.one() and y * x == HQ.one()


@given(quat_coords, quat_coords, quat_coords, st.sampled_from([(-1, -1), (-1, -3), (2, 5)]))
def test_associative_and_distributive(x, y, z, ab):
    dom = make_domain(kind="quat", a=ab[0], b=ab[1])
    x, y, z = dom.elem(x), dom.elem(y), dom.elem(z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z


@given(quat_coords)
def test_center_membership_matches_commuting_with_i_and_j(c):
    x = HQ.elem(c)
    i, j = HQ.gen("i"), HQ.gen("j")
    assert membership(HQ, x, "CenterZ") == (x * i == i * x and x * j == j * x)


@given(st.integers(0, 2 ** 32))
def test_subfield_L_is_commutative(seed):
    rng = random.Random(seed)
    x = HQ.elem([rng.randint(-5, 5), rng.randint(-5, 5), 0, 0])
    y = HQ.elem([rng.randint(-5, 5), rng.randint(-5, 5), 0, 0])
    assert membership(HQ, x, "SubfieldL") and membership(HQ, y, "SubfieldL")
    assert x * y == y * x


@settings(max_examples=50)
@given(st.integers(0, 2 ** 32), st.sampled_from([F(2), F(3), F(7), QQ, HQ]))
def test_json_round_trip(seed, dom):
    x = rand_elem(dom, random.Random(seed))
    assert parse_elem(dom, format_elem(x)) == x


def test_rationals_stay_normalised():
    x = QQ.elem([Fraction(2, -4)])
    assert x.coords[0].denominator == 2 and x.coords[0].numerator == -1
    assert format_elem(x) == "-1/2"
