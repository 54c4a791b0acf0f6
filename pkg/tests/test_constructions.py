import pytest

from maxcomm.centralizer import span
from maxcomm.constructions import (
    dm_family,
    example1_claim,
    example1_ring,
    example1_verify,
    example2_ring,
    example2_verify,
    is_banded,
    lemma1_claim,
    lemma1_report,
    lemma2_claim,
    lemma2_predicate,
    lemma2_report,
)
from maxcomm.dmat import corner, elementary, identity, jordan_nilpotent, mat_pow
from maxcomm.errors import UnsupportedDomain
from maxcomm.scalars import HQ, QQ, F
from maxcomm.subalgebra import decompose, nilradical

from conftest import DOMAINS, DOMAIN_IDS

SIZES = [2, 3, 4]


def test_jordan_claim_examples():
    N = jordan_nilpotent(F(2), 2)
    assert lemma1_claim(F(2), 2) == span(F(2), 2, [identity(F(2), 2), N])
    assert lemma1_claim(HQ, 3, "LN").dimZ == 8
    N = jordan_nilpotent(QQ, 3)
    assert lemma1_claim(QQ, 3) == span(QQ, 3, [identity(QQ, 3), N, mat_pow(N, 2)])


@pytest.mark.parametrize("n", SIZES)
@pytest.mark.parametrize("dom", DOMAINS, ids=DOMAIN_IDS)
def test_jordan_centralizer_matches_claim(dom, n):
    r = lemma1_report(dom, n)
    assert r["equal"]
    # D*I + ... + D*N^{n-2} + D*E_{1,n}: n summands of Z-dimension [D:Z]
    assert r["computed"].dimZ == n * dom.z_basis_size


@pytest.mark.parametrize("n,dim", [(2, 6), (3, 8), (4, 10)])
def test_LN_centralizer_over_quaternions(n, dim):
    r = lemma1_report(HQ, n, "LN")
    assert r["equal"] and r["claim"].dimZ == dim


@pytest.mark.parametrize("n", SIZES)
@pytest.mark.parametrize("dom", DOMAINS, ids=DOMAIN_IDS)
def test_corner_centralizer_matches_predicate(dom, n):
    r = lemma2_report(dom, n)
    assert r["equal"]
    # 2n - 3 cells forced to zero, two tied central corners, (n-1)^2 free cells in D
    assert r["claim"].dimZ == 1 + (n - 1) ** 2 * dom.z_basis_size
    assert all(lemma2_predicate(X) for X in r["computed"].matrices)


def test_corner_claim_examples():
    assert lemma2_claim(F(2), 2) == span(F(2), 2, [identity(F(2), 2), elementary(F(2), 2, 1, 2)])
    assert lemma2_claim(HQ, 3).dimZ == 17
    assert all(lemma2_predicate(identity(QQ, n)) for n in SIZES)
    assert not lemma2_predicate(elementary(QQ, 3, 2, 1))


@pytest.mark.parametrize("n,dim", [(2, 5), (3, 7), (4, 9)])
def test_banded_quaternion_ring(n, dim):
    res = example1_verify(HQ, n)
    assert res == {
        "commutative": True,
        "maximalCommutative": True,
        "idealProperty": True,
        "local": True,
        "banded": True,
        "dimZ": dim,
    }
    R = example1_ring(HQ, n)
    rep = decompose(R)
    assert rep.factorCount == 1 and rep.jEqualsN and rep.nilIndex <= n
    # the nilradical is everything off the diagonal (codimension 1)
    assert nilradical(R).dimZ == dim - 1


def test_banded_ring_matches_its_description():
    assert example1_ring(HQ, 3).space == example1_claim(HQ, 3)


def test_corner_is_annihilated_by_the_band():
    N, M = jordan_nilpotent(HQ, 3), corner(HQ, 3)
    assert (N * M).is_zero() and (M * N).is_zero()


def test_banded_rejects_noncentral_diagonal():
    X = identity(HQ, 3)
    assert is_banded(X)
    from maxcomm.dmat import scale_left

    assert not is_banded(scale_left(HQ.gen("i"), X))
    assert not is_banded(elementary(HQ, 3, 1, 2))  # band entries must repeat down the diagonal


@pytest.mark.parametrize("n", SIZES)
def test_L_polynomial_ring(n):
    res = example2_verify(HQ, n)
    assert res["equalsLN_polynomials"] and res["maximalCommutative"]
    assert res["dimOverL"] == n and res["dimZ"] == 2 * n
    assert res["hasNilpotents"] and res["local"]
    R = example2_ring(HQ, n)
    rep = decompose(R)
    assert rep.factorCount == 1
    i = HQ.gen("i")
    from maxcomm.dmat import scale_left

    N = jordan_nilpotent(HQ, n)
    expected = span(HQ, n, [scale_left(l, mat_pow(N, k)) for k in range(1, n) for l in (HQ.one(), i)])
    assert rep.nilradical == expected


@pytest.mark.parametrize("dom", [F(2), F(5), QQ], ids=lambda d: d.name)
def test_quaternion_constructions_reject_fields(dom):
    with pytest.raises(UnsupportedDomain):
        example1_ring(dom, 2)
    with pytest.raises(UnsupportedDomain):
        example2_ring(dom, 3)


def test_dm_family_spans_D_times_corner():
    assert span(HQ, 3, dm_family(HQ, 3)).dimZ == 4
