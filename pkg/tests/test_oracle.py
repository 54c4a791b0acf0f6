import json
from pathlib import Path

import pytest

from maxcomm.centralizer import span
from maxcomm.dmat import flatten, identity, jordan_nilpotent
from maxcomm.errors import InstanceTooLarge
from maxcomm.oracle import enumerate_exhaustive, sweep_generated
from maxcomm.scalars import F

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "maxcomm" / "golden"


def orbit_count(q):
    """Maximal commutative subalgebras of M_2(F_q), counted by conjugacy classes.

    Each is F_q[A] for a non-scalar A, of one of three types: split torus
    (normaliser of order 2(q-1)^2), non-split torus F_{q^2} (normaliser of
    order 2(q^2-1)) or F_q[N] (normaliser the Borel subgroup, order q(q-1)^2).
    Dividing |GL_2(F_q)| = (q^2-1)(q^2-q) by each gives
    q(q+1)/2 + q(q-1)/2 + (q+1) = q^2 + q + 1.
    """
    gl2 = (q * q - 1) * (q * q - q)
    return gl2 // (2 * (q - 1) ** 2) + gl2 // (2 * (q * q - 1)) + gl2 // (q * (q - 1) ** 2)


@pytest.fixture(scope="module")
def exhaustive22():
    return enumerate_exhaustive(2, 2)


def test_orbit_count_formula():
    assert orbit_count(2) == 7 and orbit_count(3) == 13


def test_exhaustive_M2F2(exhaustive22):
    rep = exhaustive22
    assert rep.allTheoremChecksPassed
    assert rep.ringsFound == orbit_count(2)
    for r in rep.perRing:
        assert r["dimZ"] == 2 and r["factorCount"] <= 2 and r["nilIndex"] <= 2 and r["jEqualsN"]
        assert r["checks"]["jDefinitionEqualsN"]
    assert rep.extra["identityPassAgrees"] and rep.extra["subsetsAreSpans"]


def test_exhaustive_contains_jordan_algebra_and_not_scalars(exhaustive22):
    F2 = F(2)
    IN = span(F2, 2, [identity(F2, 2), jordan_nilpotent(F2, 2)])
    bases = exhaustive22.bases()
    assert tuple(map(tuple, IN.basis)) in bases
    assert ((1, 0, 0, 1),) not in bases


def test_exhaustive_and_sweep_agree(exhaustive22):
    sweep = sweep_generated(2, 2, 2)
    assert sweep.bases() == exhaustive22.bases()
    assert sweep.perRing == exhaustive22.perRing


def test_exhaustive_matches_golden(exhaustive22):
    golden = json.loads((GOLDEN / "enumerate_p2_n2_exhaustive.json").read_text())
    assert golden == json.loads(json.dumps(exhaustive22.to_dict()))


def test_sweep_M2F3():
    rep = sweep_generated(3, 2, 2)
    assert rep.allTheoremChecksPassed
    assert rep.ringsFound == orbit_count(3)
    assert all(r["factorCount"] <= 2 and r["nilIndex"] <= 2 for r in rep.perRing)


def test_sweep_M3F2_parallel_matches_golden():
    rep = sweep_generated(2, 3, 2, workers=2)
    assert rep.allTheoremChecksPassed
    assert all(r["factorCount"] <= 3 and r["nilIndex"] <= 3 for r in rep.perRing)
    golden = json.loads((GOLDEN / "enumerate_p2_n3_sweep.json").read_text())
    assert golden == json.loads(json.dumps(rep.to_dict()))


def test_degenerate_one_by_one():
    for rep in (enumerate_exhaustive(2, 1), sweep_generated(2, 1, 1)):
        assert rep.ringsFound == 1
        assert rep.perRing[0]["canonicalBasis"] == [[1]]
        assert rep.perRing[0]["factorCount"] == 1 and rep.perRing[0]["nilIndex"] == 1


def test_instance_limits():
    with pytest.raises(InstanceTooLarge):
        enumerate_exhaustive(2, 3)
    with pytest.raises(InstanceTooLarge):
        sweep_generated(5, 3, 2)
