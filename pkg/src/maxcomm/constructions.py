"""The Jordan-block centralizer families and the two quaternion examples.

Each ``*_claim`` builds the claimed subspace directly from its description and
each ``*_verify`` compares it with a centralizer computed by linear solve.  Set
inputs such as ``L*N`` or ``D*M`` are passed as Z-spanning families.
"""
from __future__ import annotations

from .centralizer import ZSubspace, centralizer_basis, span
from .dmat import (
    DMat,
    corner,
    elementary,
    identity,
    jordan_nilpotent,
    mat_mul,
    mat_pow,
    scale_left,
)
from .errors import UnsupportedDomain, VerificationFailed
from .scalars import Domain, membership
from .subalgebra import (
    Subalgebra,
    decompose,
    is_commutative,
    is_local,
    is_maximal_commutative,
    is_nilpotent,
)


def _need_n(n: int) -> None:
    if n < 2:
        raise ValueError("these constructions need n >= 2")


def _need_quaternions(domain: Domain) -> None:
    if domain.is_field:
        raise UnsupportedDomain(f"{domain.name} is a field, so L = D and the example degenerates")


def ln_family(domain: Domain, n: int) -> list[DMat]:
    """Z-spanning family of L*N."""
    N = jordan_nilpotent(domain, n)
    return [scale_left(l, N) for l in domain.l_basis()]


def dm_family(domain: Domain, n: int) -> list[DMat]:
    """Z-spanning family of D*E_{1,n}."""
    M = corner(domain, n)
    return [scale_left(d, M) for d in domain.z_basis()]


# -- centralizer of the Jordan block -----------------------------------------

def lemma1_claim(domain: Domain, n: int, variant: str = "plainN") -> ZSubspace:
    """D*I + D*N + ... + D*N^{n-2} + D*E_{1,n}, or its L-coefficient variant."""
    _need_n(n)
    if variant not in ("plainN", "LN"):
        raise ValueError(f"unknown variant {variant!r}")
    N = jordan_nilpotent(domain, n)
    band = domain.z_basis() if variant == "plainN" else domain.l_basis()
    mats = [scale_left(d, mat_pow(N, k)) for k in range(n - 1) for d in band]
    mats += dm_family(domain, n)
    return span(domain, n, mats)


def lemma1_computed(domain: Domain, n: int, variant: str = "plainN") -> ZSubspace:
    gens = [jordan_nilpotent(domain, n)] if variant == "plainN" else ln_family(domain, n)
    return centralizer_basis(domain, n, gens)


def lemma1_report(domain: Domain, n: int, variant: str = "plainN") -> dict:
    claim = lemma1_claim(domain, n, variant)
    computed = lemma1_computed(domain, n, variant)
    return {"claim": claim, "computed": computed, "equal": claim == computed}


def lemma1_verify(domain: Domain, n: int, variant: str = "plainN") -> bool:
    return lemma1_report(domain, n, variant)["equal"]


# -- centralizer of D*E_{1,n} --------------------------------------------------

def lemma2_predicate(X: DMat) -> bool:
    """Zero first column below (1,1), zero last row left of (n,n), equal central corners."""
    n = X.n
    if any(not X[i, 0].is_zero() for i in range(1, n)):
        return False
    if any(not X[n - 1, j].is_zero() for j in range(n - 1)):
        return False
    return X[0, 0] == X[n - 1, n - 1] and membership(X.domain, X[0, 0], "CenterZ")


def lemma2_claim(domain: Domain, n: int) -> ZSubspace:
    _need_n(n)
    one = domain.one()
    corners = elementary(domain, n, 1, 1, one) + elementary(domain, n, n, n, one)
    mats = [corners]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if (j == 1 and i > 1) or (i == n and j < n) or (i, j) in ((1, 1), (n, n)):
                continue
            mats += [elementary(domain, n, i, j, d) for d in domain.z_basis()]
    return span(domain, n, mats)


def lemma2_computed(domain: Domain, n: int) -> ZSubspace:
    return centralizer_basis(domain, n, dm_family(domain, n))


def lemma2_report(domain: Domain, n: int) -> dict:
    claim = lemma2_claim(domain, n)
    computed = lemma2_computed(domain, n)
    return {"claim": claim, "computed": computed, "equal": claim == computed}


def lemma2_verify(domain: Domain, n: int) -> bool:
    return lemma2_report(domain, n)["equal"]


# -- example with a non-artinian limit ----------------------------------------

def example1_claim(domain: Domain, n: int) -> ZSubspace:
    """Z*I + L*N + ... + L*N^{n-2} + D*E_{1,n} (banded, central diagonal)."""
    N = jordan_nilpotent(domain, n)
    mats = [identity(domain, n)]
    mats += [scale_left(l, mat_pow(N, k)) for k in range(1, n - 1) for l in domain.l_basis()]
    mats += dm_family(domain, n)
    return span(domain, n, mats)


def example1_ring(domain: Domain, n: int) -> Subalgebra:
    """Centralizer of L*N together with D*E_{1,n}."""
    _need_quaternions(domain)
    _need_n(n)
    space = centralizer_basis(domain, n, ln_family(domain, n) + dm_family(domain, n))
    if space != example1_claim(domain, n):
        raise VerificationFailed("centralizer does not have the banded shape")
    return Subalgebra(space)


def is_banded(X: DMat) -> bool:
    """Upper triangular, entry (i, i+k) depending only on k, corner entry free,
    central diagonal and band entries in L."""
    n = X.n
    dom = X.domain
    for i in range(n):
        for j in range(n):
            if j < i and not X[i, j].is_zero():
                return False
    for k in range(n - 1):
        diag_k = [X[i, i + k] for i in range(n - k)]
        if any(x != diag_k[0] for x in diag_k):
            return False
        subset = "CenterZ" if k == 0 else "SubfieldL"
        if not membership(dom, diag_k[0], subset):
            return False
    return True


def example1_verify(domain: Domain, n: int) -> dict:
    R = example1_ring(domain, n)
    ideal_ok = True
    for dM in dm_family(domain, n):
        line = span(domain, n, [dM])
        for r in R.basis:
            if not (line.contains(mat_mul(r, dM)) and line.contains(mat_mul(dM, r))):
                ideal_ok = False
    return {
        "commutative": is_commutative(R),
        "maximalCommutative": is_maximal_commutative(R),
        "idealProperty": ideal_ok,
        "local": is_local(R),
        "banded": all(is_banded(X) for X in R.basis),
        "dimZ": R.dimZ,
    }


# -- example that is artinian ---------------------------------------------------

def example2_claim(domain: Domain, n: int) -> ZSubspace:
    """L[N] = span of l * N^k for l in the L-basis and 0 <= k < n."""
    N = jordan_nilpotent(domain, n)
    return span(domain, n, [scale_left(l, mat_pow(N, k)) for k in range(n) for l in domain.l_basis()])


def example2_ring(domain: Domain, n: int) -> Subalgebra:
    """Centralizer of L*I together with L*N."""
    _need_quaternions(domain)
    _need_n(n)
    I = identity(domain, n)
    gens = [scale_left(l, I) for l in domain.l_basis()] + ln_family(domain, n)
    return Subalgebra(centralizer_basis(domain, n, gens))


def example2_verify(domain: Domain, n: int) -> dict:
    R = example2_ring(domain, n)
    N = jordan_nilpotent(domain, n)
    return {
        "equalsLN_polynomials": R.space == example2_claim(domain, n),
        "maximalCommutative": is_maximal_commutative(R),
        "dimOverL": R.dimZ // domain.l_basis_size,
        "hasNilpotents": R.contains(N) and is_nilpotent(N) and not N.is_zero(),
        "local": is_local(R),
        "dimZ": R.dimZ,
    }


def example_factor_count(R: Subalgebra) -> int:
    return decompose(R).factorCount
