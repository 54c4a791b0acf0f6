"""Brute-force ground truth over small matrix rings M_n(F_p).

``enumerate_exhaustive`` walks every subset of M_n(F_p) and keeps the unital,
commutative, multiplicatively and additively closed ones that equal their own
centralizer; closure and centralizer are decided on element tables, with no
linear algebra involved.  ``sweep_generated`` scales further by closing every
tuple of pairwise commuting matrices instead of every subset.

Each ring found is then run through :func:`maxcomm.subalgebra.verify_theorem`.
Rings are deduplicated by canonical echelon basis, not up to conjugacy.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb

from . import kernels
from .centralizer import from_vectors
from .errors import InstanceTooLarge
from .scalars import F
from .subalgebra import (
    Subalgebra,
    decompose,
    is_maximal_commutative,
    jacobson_radical,
    verify_theorem,
)

log = logging.getLogger(__name__)

MAX_SUBSET_ELEMENTS = 16
MAX_TUPLES = 10 ** 7


@dataclass
class EnumerationReport:
    p: int
    n: int
    mode: str
    ringsFound: int
    allTheoremChecksPassed: bool
    perRing: list
    maxGens: int | None = None
    extra: dict = field(default_factory=dict)

    def bases(self) -> list:
        return [tuple(map(tuple, r["canonicalBasis"])) for r in self.perRing]

    def to_dict(self) -> dict:
        out = {
            "p": self.p,
            "n": self.n,
            "mode": self.mode,
            "ringsFound": self.ringsFound,
            "allTheoremChecksPassed": self.allTheoremChecksPassed,
            "perRing": self.perRing,
        }
        if self.maxGens is not None:
            out["maxGens"] = self.maxGens
        out.update(self.extra)
        return out


def all_matrices(p: int, n: int) -> list[tuple]:
    return list(itertools.product(range(p), repeat=n * n))


def _identity_vec(n: int) -> tuple:
    return tuple(1 if i % (n + 1) == 0 else 0 for i in range(n * n))


def _ring_entry(S: Subalgebra) -> dict:
    checks = verify_theorem(S)
    if S.domain.zp ** S.dimZ <= 4096:
        checks["jDefinitionEqualsN"] = (
            jacobson_radical(S, method="definition") == decompose(S).nilradical
        )
        checks["passed"] = checks["passed"] and checks["jDefinitionEqualsN"]
    return {
        "canonicalBasis": [list(v) for v in S.space.basis],
        "dimZ": S.dimZ,
        "factorCount": checks["factorCount"],
        "jEqualsN": checks["jEqualsN"],
        "nilIndex": checks["nilIndex"],
        "passed": checks["passed"],
        "checks": {k: v for k, v in checks.items() if isinstance(v, bool) and k != "passed"},
    }


def _sorted_entries(entries: list) -> list:
    return sorted(entries, key=lambda e: (e["dimZ"], e["canonicalBasis"]))


def _inclusion_maximal(masks: list[int]) -> list[int]:
    return [a for a in masks if not any(a != b and a & b == a for b in masks)]


def enumerate_exhaustive(p: int = 2, n: int = 2) -> EnumerationReport:
    """All maximal commutative subrings of M_n(F_p), by subset enumeration."""
    m = p ** (n * n)
    if m > MAX_SUBSET_ELEMENTS:
        raise InstanceTooLarge(f"M_{n}(F_{p}) has {m} elements; 2^{m} subsets is too many")
    elems = all_matrices(p, n)
    index = {e: t for t, e in enumerate(elems)}
    add = [[index[tuple((x + y) % p for x, y in zip(a, b))] for b in elems] for a in elems]
    mul = [[index[kernels.matmul_modp(a, b, n, p)] for b in elems] for a in elems]
    zero = index[(0,) * (n * n)]
    one = index[_identity_vec(n)]

    unital = kernels.enumerate_subrings(add, mul, m, zero, one, True)
    maximal = [s for s in unital if kernels.centralizer_mask(s, mul, m) == s]

    # second pass without assuming 1: maximal commutative rngs must contain 1
    rngs = kernels.enumerate_subrings(add, mul, m, zero, one, False)
    rng_max = _inclusion_maximal(rngs)
    identity_pass = all(s >> one & 1 for s in rng_max) and sorted(rng_max) == sorted(maximal)

    dom = F(p)
    entries = []
    spans_match = True
    for s in maximal:
        members = [elems[t] for t in range(m) if s >> t & 1]
        S = Subalgebra(from_vectors(dom, n, members))
        spans_match &= p ** S.dimZ == len(members)
        entries.append(_ring_entry(S))
    entries = _sorted_entries(entries)
    ok = identity_pass and spans_match and all(e["passed"] for e in entries)
    return EnumerationReport(
        p=p,
        n=n,
        mode="exhaustive",
        ringsFound=len(entries),
        allTheoremChecksPassed=ok,
        perRing=entries,
        extra={
            "unitalCommutativeSubrings": len(unital),
            "commutativeSubrngs": len(rngs),
            "identityPassAgrees": identity_pass,
            "subsetsAreSpans": spans_match,
        },
    )


def _closures_chunk(args):
    tuples, mats, n, p = args
    out = set()
    for t in tuples:
        out.add(kernels.closure_modp([mats[i] for i in t], n, p))
    return out


def _commuting_tuples(m: int, pairs: list, k: int):
    """Index tuples ``i1 < ... < ik`` that are pairwise commuting."""
    if k == 1:
        yield from ((i,) for i in range(m))
        return
    if k == 2:
        yield from pairs
        return
    adj = [set() for _ in range(m)]
    for i, j in pairs:
        adj[i].add(j)
    for t in _commuting_tuples(m, pairs, k - 1):
        common = set.intersection(*(adj[i] for i in t))
        for j in sorted(x for x in common if x > t[-1]):
            yield t + (j,)


def sweep_generated(p: int, n: int, max_gens: int = 2, workers: int = 1) -> EnumerationReport:
    """Maximal commutative subalgebras of M_n(F_p) generated by <= max_gens matrices."""
    mats = all_matrices(p, n)
    m = len(mats)
    estimate = sum(comb(m, k) for k in range(1, max_gens + 1))
    if estimate > MAX_TUPLES:
        raise InstanceTooLarge(f"about {estimate} generator tuples exceed the limit {MAX_TUPLES}")
    pairs = kernels.commuting_pairs(mats, n, p) if max_gens >= 2 else []
    closures: set = set()
    examined = 0
    for k in range(1, max_gens + 1):
        tuples = list(_commuting_tuples(m, pairs, k))
        examined += len(tuples)
        if workers > 1 and len(tuples) > 1000:
            size = -(-len(tuples) // (workers * 4))
            chunks = [(tuples[i:i + size], mats, n, p) for i in range(0, len(tuples), size)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part in pool.map(_closures_chunk, chunks):
                    closures |= part
        else:
            closures |= _closures_chunk((tuples, mats, n, p))
    log.info("sweep p=%d n=%d: %d tuples, %d distinct closures", p, n, examined, len(closures))

    dom = F(p)
    entries = []
    for basis in sorted(closures):
        S = Subalgebra(from_vectors(dom, n, basis))
        if is_maximal_commutative(S):
            entries.append(_ring_entry(S))
    entries = _sorted_entries(entries)
    return EnumerationReport(
        p=p,
        n=n,
        mode="sweep",
        maxGens=max_gens,
        ringsFound=len(entries),
        allTheoremChecksPassed=all(e["passed"] for e in entries),
        perRing=entries,
        extra={"tuplesExamined": examined, "distinctClosures": len(closures)},
    )
