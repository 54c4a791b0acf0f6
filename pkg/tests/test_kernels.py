import itertools
import os
import random
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from maxcomm import _pykernels, kernels
from maxcomm.oracle import all_matrices

ck = pytest.importorskip("maxcomm._ckernels")

PRIMES = [2, 3, 5, 7, 97]


@settings(max_examples=200)
@given(st.sampled_from(PRIMES), st.integers(1, 8), st.integers(1, 8), st.integers(0, 2 ** 32))
def test_rref_backends_agree(p, nrows, ncols, seed):
    rng = random.Random(seed)
    rows = [[rng.randrange(p) if rng.random() < 0.6 else 0 for _ in range(ncols)] for _ in range(nrows)]
    assert ck.rref_modp(rows, ncols, p) == _pykernels.rref_modp(rows, ncols, p)


@settings(max_examples=200)
@given(st.sampled_from(PRIMES), st.integers(1, 4), st.integers(0, 2 ** 32))
def test_matmul_backends_agree(p, n, seed):
    rng = random.Random(seed)
    a = tuple(rng.randrange(p) for _ in range(n * n))
    b = tuple(rng.randrange(p) for _ in range(n * n))
    assert ck.matmul_modp(a, b, n, p) == _pykernels.matmul_modp(a, b, n, p)


@settings(max_examples=100)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 3), st.integers(0, 3), st.integers(0, 2 ** 32))
def test_closure_backends_agree(p, n, k, seed):
    rng = random.Random(seed)
    gens = [tuple(rng.randrange(p) for _ in range(n * n)) for _ in range(k)]
    assert ck.closure_modp(gens, n, p) == _pykernels.closure_modp(gens, n, p)


def test_commuting_pairs_agree():
    mats = all_matrices(3, 2)
    assert ck.commuting_pairs(mats, 2, 3) == _pykernels.commuting_pairs(mats, 2, 3)


def test_subring_enumeration_agrees():
    p, n = 2, 2
    elems = all_matrices(p, n)
    index = {e: t for t, e in enumerate(elems)}
    add = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems]
    mul = [[index[_pykernels.matmul_modp(a, b, n, p)] for b in elems] for a in elems]
    zero, one = index[(0, 0, 0, 0)], index[(1, 0, 0, 1)]
    for unital in (True, False):
        got = ck.enumerate_subrings(add, mul, 16, zero, one, unital)
        assert sorted(got) == sorted(_pykernels.enumerate_subrings(add, mul, 16, zero, one, unital))
    for s in got:
        assert ck.centralizer_mask(s, mul, 16) == _pykernels.centralizer_mask(s, mul, 16)


def test_backend_can_be_forced_from_the_environment():
    code = "from maxcomm import kernels; print(kernels.BACKEND)"
    env = dict(os.environ, MAXCOMM_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env.pop("MAXCOMM_PURE_PYTHON")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"
    assert kernels.BACKEND in ("cython", "python")
