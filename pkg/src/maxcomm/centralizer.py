"""Centralizers in M_n(D) as subspaces over the center Z.

The condition ``XG = GX`` is not D-linear in X when D is noncommutative, but it
is always Z-linear, so every centralizer is obtained as the kernel of a linear
system in the ``n^2 * [D:Z]`` Z-coordinates of X.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from . import zlinalg
from .dmat import DMat, flatten, identity, mat_mul, unflatten
from .errors import DomainMismatch, ShapeMismatch
from .scalars import Domain, d_mul


@dataclass(frozen=True)
class ZSubspace:
    """A Z-subspace of M_n(D) held as a canonical reduced echelon basis.

    Two instances are equal exactly when they describe the same subspace.
    """

    domain: Domain
    n: int
    basis: tuple
    pivots: tuple

    @property
    def dimZ(self) -> int:
        return len(self.basis)

    @property
    def ncols(self) -> int:
        return self.n * self.n * self.domain.z_basis_size

    @cached_property
    def matrices(self) -> tuple:
        return tuple(unflatten(v, self.domain, self.n) for v in self.basis)

    def contains(self, A: DMat) -> bool:
        return zlinalg.contains(self.basis, self.pivots, flatten(A), self.domain.zp)

    def contains_vector(self, v) -> bool:
        return zlinalg.contains(self.basis, self.pivots, v, self.domain.zp)

    def coordinates(self, A: DMat) -> tuple:
        """Coefficients of ``A`` (assumed inside) in the canonical basis."""
        return zlinalg.coordinates(self.basis, self.pivots, flatten(A))

    def element(self, coeffs) -> DMat:
        v = zlinalg.combine(coeffs, self.basis, self.ncols, self.domain.zp)
        return unflatten(v, self.domain, self.n)

    def issubset(self, other: "ZSubspace") -> bool:
        return all(other.contains_vector(v) for v in self.basis)

    def __add__(self, other: "ZSubspace") -> "ZSubspace":
        _same_ambient(self, other)
        return from_vectors(self.domain, self.n, self.basis + other.basis)

    def __and__(self, other: "ZSubspace") -> "ZSubspace":
        _same_ambient(self, other)
        b, piv = zlinalg.intersect(self.basis, other.basis, self.ncols, self.domain.zp)
        return ZSubspace(self.domain, self.n, b, piv)


def _same_ambient(U: ZSubspace, W: ZSubspace) -> None:
    if U.domain != W.domain:
        raise DomainMismatch(f"{U.domain.name} vs {W.domain.name}")
    if U.n != W.n:
        raise ShapeMismatch(f"M_{U.n} vs M_{W.n}")


def from_vectors(domain: Domain, n: int, vecs: Iterable) -> ZSubspace:
    ncols = n * n * domain.z_basis_size
    b, piv = zlinalg.rref(list(vecs), ncols, domain.zp)
    return ZSubspace(domain, n, b, piv)


def span(domain: Domain, n: int, mats: Iterable[DMat]) -> ZSubspace:
    """Z-span of a family of matrices."""
    return from_vectors(domain, n, [flatten(A) for A in mats])


def full_space(domain: Domain, n: int) -> ZSubspace:
    N = n * n * domain.z_basis_size
    one, zero = domain.zone(), domain.zzero()
    return ZSubspace(domain, n, tuple(tuple(one if t == s else zero for t in range(N)) for s in range(N)), tuple(range(N)))


def commutes(A: DMat, B: DMat) -> bool:
    if A.n != B.n:
        raise ShapeMismatch(f"{A.n} x {A.n} vs {B.n} x {B.n}")
    if A.domain != B.domain:
        raise DomainMismatch(f"{A.domain.name} vs {B.domain.name}")
    return mat_mul(A, B) == mat_mul(B, A)


def _commutator_images(domain: Domain, n: int, G: DMat) -> list:
    """Flattened ``X G - G X`` for every Z-basis unknown ``X = d * E_{a,b}``.

    Computed entrywise: ``X G`` is ``d * G[b, :]`` in row a and ``G X`` is
    ``G[:, a] * d`` in column b.
    """
    k = domain.z_basis_size
    p = domain.zp
    zero = domain.zzero()
    rows = []
    G_rows = G.entries
    for a in range(n):
        for b in range(n):
            for d in domain.z_basis():
                img = [zero] * (n * n * k)
                for j in range(n):
                    g = G_rows[b][j]
                    if not g.is_zero():
                        off = (a * n + j) * k
                        for t, c in enumerate(d_mul(d, g).coords):
                            img[off + t] += c
                for i in range(n):
                    g = G_rows[i][a]
                    if not g.is_zero():
                        off = (i * n + b) * k
                        for t, c in enumerate(d_mul(g, d).coords):
                            img[off + t] -= c
                if p:
                    img = [x % p for x in img]
                rows.append(img)
    return rows


def centralizer_basis(domain: Domain, n: int, gens: Sequence[DMat]) -> ZSubspace:
    """C_{M_n(D)}(gens) as a canonical Z-subspace."""
    for G in gens:
        if G.domain != domain or G.n != n:
            raise ShapeMismatch("generator outside M_n(D)")
    if not gens:
        return full_space(domain, n)
    # centralizing a set equals centralizing its Z-span
    gspace = span(domain, n, gens)
    if not gspace.basis:
        return full_space(domain, n)
    per_gen = [_commutator_images(domain, n, G) for G in gspace.matrices]
    system = [sum((blk[u] for blk in per_gen), []) for u in range(len(per_gen[0]))]
    N = n * n * domain.z_basis_size
    b, piv = zlinalg.left_kernel(system, N * len(per_gen), domain.zp)
    return ZSubspace(domain, n, b, piv)


def centralizer_of_subspace(V: ZSubspace) -> ZSubspace:
    return centralizer_basis(V.domain, V.n, V.matrices)


def bicommutant(domain: Domain, n: int, gens: Sequence[DMat]) -> ZSubspace:
    return centralizer_of_subspace(centralizer_basis(domain, n, gens))


def is_unital_subalgebra(V: ZSubspace) -> bool:
    """Contains I and is closed under products of basis elements."""
    if not V.contains(identity(V.domain, V.n)):
        return False
    mats = V.matrices
    return all(V.contains(mat_mul(x, y)) for x in mats for y in mats)
