"""Commutative unital Z-subalgebras of M_n(D) and their local decomposition.

A maximal commutative subring contains the central scalars Z*I, so subrings
are handled as unital Z-subalgebras throughout.  The decomposition follows
the inductive splitting argument: a non-nilpotent, non-invertible element A
gives D^n = Ker(A^n) + Im(A^n), every element of the ring preserves both
summands, and the ring splits into two blocks which are decomposed
recursively until every block is local.

Two independent radical computations are provided:

* :func:`nilradical` -- kernel of the trace form (Dickson), or a brute-force
  span of nilpotent elements when the characteristic is too small;
* :func:`jacobson_radical` -- the ideal generated by ``r_b(b)`` over the
  basis, where ``r_b`` is the squarefree part of the minimal polynomial of b.
  The quotient by that ideal is generated by separable elements, hence
  reduced, which pins the ideal down as the radical.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from . import kernels, poly, zlinalg
from .centralizer import ZSubspace, centralizer_of_subspace, from_vectors, span
from .dmat import (
    DMat,
    block,
    block_diag,
    diag,
    flatten,
    identity,
    is_block_diagonal,
    kernel_image,
    mat_add,
    mat_inv,
    mat_mul,
    mat_pow,
    min_poly,
    poly_eval,
    rank,
    zeros,
)
from .errors import (
    CharacteristicFallbackTooLarge,
    NilpotentOrInvertibleInput,
    NotCommutative,
    WitnessSearchExhausted,
)
from .scalars import Domain

BRUTE_FORCE_LIMIT = 2 ** 20
DEFINITION_LIMIT = 2 ** 12
IDEMPOTENT_BRUTE_LIMIT = 2 ** 8


@dataclass(frozen=True)
class Subalgebra:
    """A unital, multiplicatively closed Z-subspace of M_n(D)."""

    space: ZSubspace

    def __post_init__(self):
        if not self.space.contains(identity(self.space.domain, self.space.n)):
            raise ValueError("a Subalgebra must contain the identity")

    @property
    def domain(self) -> Domain:
        return self.space.domain

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def dimZ(self) -> int:
        return self.space.dimZ

    @property
    def basis(self) -> tuple:
        return self.space.matrices

    def contains(self, A: DMat) -> bool:
        return self.space.contains(A)

    def element(self, coeffs) -> DMat:
        return self.space.element(coeffs)

    @cached_property
    def multiplication_table(self) -> tuple:
        """``table[i][j]`` = coordinates of ``b_i b_j`` in the basis."""
        mats = self.basis
        return tuple(
            tuple(self.space.coordinates(mat_mul(x, y)) for y in mats) for x in mats
        )

    def elements(self):
        """Every element of a finite subalgebra (Z = F_p), in coefficient order."""
        p = self.domain.zp
        for coeffs in itertools.product(range(p), repeat=self.dimZ):
            yield self.element(coeffs)


def as_subalgebra(space: ZSubspace) -> Subalgebra:
    """Wrap a subspace after checking it contains I and is closed."""
    S = Subalgebra(space)
    mats = S.basis
    for x in mats:
        for y in mats:
            if not space.contains(mat_mul(x, y)):
                raise ValueError("subspace is not closed under multiplication")
    return S


def algebra_closure(domain: Domain, n: int, gens: Sequence[DMat]) -> Subalgebra:
    """Smallest unital Z-subalgebra of M_n(D) containing ``gens``."""
    if domain.kind == "Fp":
        basis = kernels.closure_modp([flatten(g) for g in gens], n, domain.p)
        return Subalgebra(from_vectors(domain, n, basis))
    V = span(domain, n, [identity(domain, n), *gens])
    gens = span(domain, n, gens).matrices
    while True:
        prods = [mat_mul(b, g) for b in V.matrices for g in gens]
        W = span(domain, n, list(V.matrices) + prods)
        if W.dimZ == V.dimZ:
            return Subalgebra(V)
        V = W


def is_commutative(S: Subalgebra) -> bool:
    mats = S.basis
    return all(
        mat_mul(mats[i], mats[j]) == mat_mul(mats[j], mats[i])
        for i in range(len(mats))
        for j in range(i + 1, len(mats))
    )


def _require_commutative(S: Subalgebra) -> None:
    if not is_commutative(S):
        raise NotCommutative("subalgebra is not commutative")


def is_maximal_commutative(S: Subalgebra) -> bool:
    """For commutative S, C(S) contains S; maximality is equality."""
    _require_commutative(S)
    return centralizer_of_subspace(S.space) == S.space


def is_nilpotent(A: DMat) -> bool:
    if A.domain.kind == "Fp":
        v = flatten(A)
        cur = v
        for _ in range(A.n - 1):
            cur = kernels.matmul_modp(cur, v, A.n, A.domain.p)
        return not any(cur)
    return mat_pow(A, A.n).is_zero()


def is_invertible(A: DMat) -> bool:
    return rank(A) == A.n


# -- radicals ---------------------------------------------------------------

def _trace_radical(S: Subalgebra) -> ZSubspace:
    p = S.domain.zp
    table = S.multiplication_table
    m = S.dimZ
    traces = [sum(table[k][j][j] for j in range(m)) for k in range(m)]
    gram = []
    for i in range(m):
        row = []
        for j in range(m):
            t = sum(c * tk for c, tk in zip(table[i][j], traces))
            row.append(t % p if p else t)
        gram.append(row)
    ker, _ = zlinalg.left_kernel(gram, m, p)
    return from_vectors(S.domain, S.n, [zlinalg.combine(x, S.space.basis, S.space.ncols, p) for x in ker])


def _brute_nilradical(S: Subalgebra) -> ZSubspace:
    p = S.domain.zp
    if p == 0 or p ** S.dimZ > BRUTE_FORCE_LIMIT:
        raise CharacteristicFallbackTooLarge(
            f"cannot enumerate a subalgebra of dimension {S.dimZ} over F_{p}"
        )
    nil = [flatten(x) for x in S.elements() if is_nilpotent(x)]
    return from_vectors(S.domain, S.n, nil)


def nilradical(S: Subalgebra, method: str = "auto") -> ZSubspace:
    """The ideal of nilpotent elements of a commutative subalgebra.

    ``method`` is ``"trace"`` (valid when char Z = 0 or char Z > dim S),
    ``"brute"`` (finite Z only) or ``"auto"``.
    """
    _require_commutative(S)
    p = S.domain.zp
    if method == "auto":
        method = "trace" if p == 0 or p > S.dimZ else "brute"
    if method == "trace":
        if p and p <= S.dimZ:
            raise CharacteristicFallbackTooLarge(
                f"trace form is unreliable for char {p} <= dim {S.dimZ}"
            )
        return _trace_radical(S)
    if method == "brute":
        return _brute_nilradical(S)
    raise ValueError(f"unknown method {method!r}")


def _jacobson_by_minpoly(S: Subalgebra) -> ZSubspace:
    p = S.domain.zp
    gens = []
    for b in S.basis:
        r = poly.radical(min_poly(b), p)
        rb = poly_eval(r, b)
        if not rb.is_zero():
            gens.append(rb)
    return span(S.domain, S.n, [mat_mul(g, s) for g in gens for s in S.basis])


def _jacobson_by_definition(S: Subalgebra) -> ZSubspace:
    """Brute force: x is in J iff I - s x is invertible for every s in S."""
    p = S.domain.zp
    if p == 0 or p ** S.dimZ > DEFINITION_LIMIT:
        raise CharacteristicFallbackTooLarge("definition check needs a small finite subalgebra")
    one = identity(S.domain, S.n)
    elems = list(S.elements())
    inJ = []
    for x in elems:
        if all(is_invertible(mat_add(one, -mat_mul(s, x))) for s in elems):
            inJ.append(flatten(x))
    return from_vectors(S.domain, S.n, inJ)


def jacobson_radical(S: Subalgebra, method: str = "minpoly") -> ZSubspace:
    """J(S) for commutative finite-dimensional S.

    ``"minpoly"`` builds the ideal generated by the squarefree parts of basis
    minimal polynomials; ``"definition"`` checks quasi-regularity directly on
    every element of a small finite S.  Neither uses the trace form.
    """
    _require_commutative(S)
    if method == "minpoly":
        return _jacobson_by_minpoly(S)
    if method == "definition":
        return _jacobson_by_definition(S)
    raise ValueError(f"unknown method {method!r}")


def ideal_power(S: Subalgebra, I: ZSubspace, k: int) -> ZSubspace:
    cur = I
    for _ in range(k - 1):
        cur = span(S.domain, S.n, [mat_mul(x, y) for x in cur.matrices for y in I.matrices])
    return cur


def nil_index(S: Subalgebra, I: ZSubspace) -> int:
    """Least k >= 1 with I^k = 0 (1 when I = 0)."""
    k = 1
    cur = I
    while cur.dimZ:
        cur = span(S.domain, S.n, [mat_mul(x, y) for x in cur.matrices for y in I.matrices])
        k += 1
        if k > S.dimZ + 1:
            raise ValueError("ideal is not nilpotent")
    return k


# -- idempotents --------------------------------------------------------------

def _cmul(S: Subalgebra, u, v) -> tuple:
    """Product of two elements given by coordinates in the basis of S."""
    p = S.domain.zp
    table = S.multiplication_table
    out = [S.domain.zzero()] * S.dimZ
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if not b:
                continue
            ab = a * b
            for t, c in enumerate(table[i][j]):
                if c:
                    out[t] += ab * c
    return tuple(x % p for x in out) if p else tuple(out)


def _cmin_poly(S: Subalgebra, x, e):
    """Minimal polynomial of x inside eS (x = xe), plus the powers e, x, x^2, ...

    Powers are reduced incrementally against the earlier ones; each stored
    row carries the polynomial that produced it, so the first power that
    reduces to zero hands back the minimal polynomial directly.
    """
    p = S.domain.zp
    m = S.dimZ
    zero, one = S.domain.zzero(), S.domain.zone()
    powers = [e]
    reduced = []  # (pivot, row, polynomial)
    cur = e
    while True:
        k = len(powers) - 1
        v = list(cur)
        f = [zero] * k + [one]
        for piv, row, g in reduced:
            c = v[piv]
            if c:
                v = [a - c * b for a, b in zip(v, row)]
                f = [a - c * b for a, b in zip(f, g + [zero] * (len(f) - len(g)))]
                if p:
                    v = [a % p for a in v]
                    f = [a % p for a in f]
        piv = next((t for t in range(m) if v[t]), None)
        if piv is None:
            return f, powers
        inv = pow(v[piv], -1, p) if p else 1 / v[piv]
        v = [a * inv % p for a in v] if p else [a * inv for a in v]
        f = [a * inv % p for a in f] if p else [a * inv for a in f]
        reduced.append((piv, v, f))
        cur = _cmul(S, cur, x)
        powers.append(cur)


def _crt_idempotents(S: Subalgebra, x, e) -> list | None:
    p = S.domain.zp
    mu, powers = _cmin_poly(S, x, e)
    if len(poly.radical(mu, p)) <= 2:
        return None
    facs = poly.factor(mu, p)
    if len(facs) < 2:
        return None
    out = []
    for q, m in facs:
        f = poly.power(q, m, p)
        g = poly.divmod_(mu, f, p)[0]
        _, u, _ = poly.xgcd(g, f, p)
        c = poly.divmod_(poly.mul(u, g, p), mu, p)[1]
        out.append(zlinalg.combine(c, powers[: len(c)], S.dimZ, p))
    return out


def _split_candidates(S: Subalgebra, e):
    """Elements of eS to try, as coordinate vectors in the basis of S."""
    p = S.domain.zp
    m = S.dimZ
    units = [tuple(S.domain.zone() if t == i else S.domain.zzero() for t in range(m)) for i in range(m)]
    mats = [v for v in (_cmul(S, e, u) for u in units) if any(v)]
    k = len(mats)
    if p and p ** k <= IDEMPOTENT_BRUTE_LIMIT:
        for coeffs in itertools.product(range(p), repeat=k):
            if any(coeffs):
                yield zlinalg.combine(coeffs, mats, m, p)
        return
    yield from mats
    scal = range(1, p) if p else (1, -1, 2)
    for i, j in itertools.combinations(range(k), 2):
        for c in scal:
            coeffs = [0] * k
            coeffs[i], coeffs[j] = 1, c
            yield zlinalg.combine(coeffs, mats, m, p)
    for base in (2, 3, 5):
        yield zlinalg.combine([base ** t + t for t in range(k)], mats, m, p)


def _zscale(dom: Domain, c, A: DMat) -> DMat:
    from .dmat import scale_left

    return scale_left(dom.scalar(c), A)


def idempotents_via_minpoly(S: Subalgebra) -> list[DMat]:
    """Orthogonal primitive idempotents of commutative S, summing to I.

    Each candidate x in eS has its minimal polynomial (relative to e) factored;
    coprime factors give idempotents by the Chinese remainder theorem.  The
    search repeats on every idempotent until none splits further.  All
    arithmetic is done on coordinates in the basis of S.
    """
    _require_commutative(S)
    done = []
    todo = [S.space.coordinates(identity(S.domain, S.n))]
    while todo:
        e = todo.pop()
        for x in _split_candidates(S, e):
            parts = _crt_idempotents(S, x, e)
            if parts:
                todo.extend(parts)
                break
        else:
            done.append(S.element(e))
    return sorted(done, key=flatten_key)


def flatten_key(A: DMat):
    return tuple(str(c) for c in flatten(A))


def is_local(S: Subalgebra) -> bool:
    """No idempotents besides 0 and I."""
    return len(idempotents_via_minpoly(S)) == 1


# -- splitting ----------------------------------------------------------------

@dataclass(frozen=True)
class FittingSplit:
    basisChange: DMat
    S1: Subalgebra
    S2: Subalgebra
    rank: int
    witness: DMat


def fitting_split(S: Subalgebra, A: DMat) -> FittingSplit:
    """Split S along Ker(A^n) + Im(A^n) for a non-nilpotent, non-invertible A in S.

    The new basis lists an echelon basis of Im(A^n) followed by one of
    Ker(A^n); conjugating by it makes every element of S block diagonal.
    """
    if is_nilpotent(A) or is_invertible(A):
        raise NilpotentOrInvertibleInput("witness must be neither nilpotent nor invertible")
    if not S.contains(A):
        raise ValueError("witness does not lie in the subalgebra")
    n = S.n
    ker, im = kernel_image(mat_pow(A, n))
    r = im.dim
    P = DMat(S.domain, list(im.basis) + list(ker.basis))
    Pinv = mat_inv(P)
    conj = [mat_mul(mat_mul(P, X), Pinv) for X in S.basis]
    for X in conj:
        if not is_block_diagonal(X, r):
            raise AssertionError("conjugated element is not block diagonal")
    S1 = Subalgebra(span(S.domain, r, [block(X, 0, r) for X in conj]))
    S2 = Subalgebra(span(S.domain, n - r, [block(X, r, n) for X in conj]))
    return FittingSplit(P, S1, S2, r, A)


def find_witness(S: Subalgebra) -> DMat:
    """First non-nilpotent non-invertible element in a fixed search order.

    Order: basis elements, then ``b_i + c b_j``, then ``b_i + b_j + b_k``.
    If none of those works, a nontrivial idempotent from the minimal
    polynomial search is used; it is never nilpotent nor invertible.
    """
    p = S.domain.zp
    mats = S.basis
    dom = S.domain

    def ok(x):
        return not is_nilpotent(x) and not is_invertible(x)

    for x in mats:
        if ok(x):
            return x
    scal = range(1, p) if p else (1, -1)
    for i, j in itertools.combinations(range(len(mats)), 2):
        for c in scal:
            x = mat_add(mats[i], _zscale(dom, c, mats[j]))
            if ok(x):
                return x
    for i, j, k in itertools.combinations(range(len(mats)), 3):
        x = mat_add(mat_add(mats[i], mats[j]), mats[k])
        if ok(x):
            return x
    idems = idempotents_via_minpoly(S)
    if len(idems) > 1:
        return idems[0]
    raise WitnessSearchExhausted("no non-nilpotent non-invertible element found")


@dataclass(frozen=True)
class LocalFactor:
    idempotent: DMat
    blockRange: tuple
    factorBasis: ZSubspace
    nilradicalBasis: ZSubspace
    residueFieldDimZ: int

    @property
    def dimZ(self) -> int:
        return self.factorBasis.dimZ


@dataclass
class DecompositionReport:
    factors: list
    basisChange: DMat
    nilradical: ZSubspace
    jacobson: ZSubspace
    nilIndex: int
    maximal: bool
    jEqualsN: bool
    nilIndexAtMostN: bool
    factorCountAtMostN: bool
    reducedImpliesFields: bool
    splits: list = field(default_factory=list)

    @property
    def factorCount(self) -> int:
        return len(self.factors)


def _split_tree(S: Subalgebra, splits: list):
    """Return ``(P, leaves)`` with ``P X P^-1`` block diagonal over the leaves."""
    if S.n == 1 or is_local(S):
        return identity(S.domain, S.n), [(S, 0)]
    A = find_witness(S)
    sp = fitting_split(S, A)
    splits.append(sp)
    P1, L1 = _split_tree(sp.S1, splits)
    P2, L2 = _split_tree(sp.S2, splits)
    P = mat_mul(block_diag(P1, P2), sp.basisChange)
    return P, L1 + [(T, off + sp.rank) for T, off in L2]


def decompose(S: Subalgebra) -> DecompositionReport:
    _require_commutative(S)
    n = S.n
    dom = S.domain
    splits: list = []
    P, leaves = _split_tree(S, splits)
    Pinv = mat_inv(P)
    factors = []
    j_equals_n = True
    for T, lo in leaves:
        hi = lo + T.n
        E = diag(dom, [dom.one() if lo <= i < hi else dom.zero() for i in range(n)])
        e = mat_mul(mat_mul(Pinv, E), P)
        N_T = nilradical(T)
        j_equals_n &= N_T == jacobson_radical(T)
        factors.append(LocalFactor(e, (lo, hi), T.space, N_T, T.dimZ - N_T.dimZ))
    N = nilradical(S)
    J = jacobson_radical(S)
    j_equals_n &= N == J
    idx = nil_index(S, N)
    reduced_ok = True
    if N.dimZ == 0:
        reduced_ok = all(f.nilradicalBasis.dimZ == 0 and f.residueFieldDimZ == f.dimZ for f in factors)
    return DecompositionReport(
        factors=factors,
        basisChange=P,
        nilradical=N,
        jacobson=J,
        nilIndex=idx,
        maximal=is_maximal_commutative(S),
        jEqualsN=j_equals_n,
        nilIndexAtMostN=idx <= n,
        factorCountAtMostN=len(factors) <= n,
        reducedImpliesFields=reduced_ok,
        splits=splits,
    )


def verify_theorem(S: Subalgebra, report: DecompositionReport | None = None) -> dict:
    """Check every finitely checkable conclusion of the structure theorem on S.

    The returned dict maps check names to booleans (plus a few counts) and has
    ``passed`` set when every check holds, S being maximal commutative included.
    """
    rep = decompose(S) if report is None else report
    n = S.n
    one = identity(S.domain, n)
    idems = [f.idempotent for f in rep.factors]
    total = zeros(S.domain, n)
    for e in idems:
        total = mat_add(total, e)
    orth = all(
        (mat_mul(a, b).is_zero() if i != j else mat_mul(a, a) == a)
        for i, a in enumerate(idems)
        for j, b in enumerate(idems)
    )
    transfer = True
    if rep.maximal:
        transfer = all(
            is_maximal_commutative(sp.S1) and is_maximal_commutative(sp.S2) for sp in rep.splits
        )
    checks = {
        "containsScalars": S.contains(one),
        "maximal": rep.maximal,
        "factorCountAtMostN": rep.factorCountAtMostN,
        "jEqualsN": rep.jEqualsN,
        "nilIndexAtMostN": rep.nilIndexAtMostN,
        "reducedImpliesFields": rep.reducedImpliesFields,
        "idempotentsValid": orth and total == one and all(S.contains(e) for e in idems),
        "idempotentCountMatches": len(idempotents_via_minpoly(S)) == rep.factorCount,
        "maximalityTransfer": transfer,
    }
    passed = all(checks.values())
    checks.update(factorCount=rep.factorCount, nilIndex=rep.nilIndex, dimZ=S.dimZ, passed=passed)
    return checks


def inverse_in(S: Subalgebra, x: DMat) -> DMat | None:
    """Inverse of ``x`` when it is invertible in M_n(D) and lies in S, else None."""
    if not is_invertible(x):
        return None
    inv = mat_inv(x)
    return inv if S.contains(inv) else None
