import random
import sys
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from maxcomm.dmat import DMat
from maxcomm.scalars import HQ, QQ, F

DOMAINS = [F(2), F(3), F(5), QQ, HQ]
DOMAIN_IDS = [d.name for d in DOMAINS]


def rand_elem(dom, rng, spread=3, zero_prob=0.0):
    if zero_prob and rng.random() < zero_prob:
        return dom.zero()
    if dom.kind == "Fp":
        return dom.scalar(rng.randrange(dom.p))
    return dom.elem(Fraction(rng.randint(-spread, spread)) for _ in range(dom.z_basis_size))


def rand_mat(dom, n, rng, spread=3, zero_prob=0.0):
    return DMat(dom, [[rand_elem(dom, rng, spread, zero_prob) for _ in range(n)] for _ in range(n)])


@st.composite
def domains(draw, finite=None):
    pool = DOMAINS if finite is None else [d for d in DOMAINS if (d.kind == "Fp") == finite]
    return draw(st.sampled_from(pool))


@st.composite
def matrices(draw, dom=None, n=None, max_n=3):
    dom = dom or draw(domains())
    n = n or draw(st.integers(1, max_n))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    zero_prob = draw(st.sampled_from([0.0, 0.3, 0.6]))
    return rand_mat(dom, n, random.Random(seed), zero_prob=zero_prob)


@pytest.fixture
def rng():
    return random.Random(20240501)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[k])
