"""Matrices over a division ring D.

D^n is a *left* D-vector space of row vectors and a matrix acts on the right,
``v -> v A``.  Row reduction therefore only ever multiplies rows by scalars on
the left, which is all Gaussian elimination needs over a skew field.  "Rank"
is left row rank.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import zlinalg
from .errors import (
    DomainMismatch,
    IndexOutOfRange,
    LengthMismatch,
    ShapeMismatch,
    Singular,
)
from .scalars import DElem, Domain, d_add, d_inv, d_mul, d_neg


class DMat:
    """An n x n matrix over D.  Immutable; entries are :class:`DElem`."""

    __slots__ = ("domain", "n", "entries", "_hash")

    def __init__(self, domain: Domain, entries: Sequence[Sequence[DElem]]):
        rows = tuple(tuple(r) for r in entries)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ShapeMismatch("a DMat must be square with n >= 1")
        for r in rows:
            for x in r:
                if x.domain != domain:
                    raise DomainMismatch(f"entry over {x.domain.name}, matrix over {domain.name}")
        self.domain = domain
        self.n = n
        self.entries = rows
        self._hash = None

    @classmethod
    def _raw(cls, domain, n, rows):
        m = object.__new__(cls)
        m.domain = domain
        m.n = n
        m.entries = rows
        m._hash = None
        return m

    def __repr__(self) -> str:
        from .scalars import format_elem

        body = [[format_elem(x) for x in r] for r in self.entries]
        return f"DMat({self.domain.name}, {body})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, DMat):
            return NotImplemented
        return self.domain == other.domain and self.entries == other.entries

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.domain, self.entries))
        return self._hash

    def __getitem__(self, ij) -> DElem:
        i, j = ij
        return self.entries[i][j]

    def __add__(self, other: "DMat") -> "DMat":
        return mat_add(self, other)

    def __sub__(self, other: "DMat") -> "DMat":
        return mat_add(self, mat_neg(other))

    def __neg__(self) -> "DMat":
        return mat_neg(self)

    def __mul__(self, other: "DMat") -> "DMat":
        return mat_mul(self, other)

    def __pow__(self, k: int) -> "DMat":
        return mat_pow(self, k)

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)


def _check(A: DMat, B: DMat) -> None:
    if A.domain != B.domain:
        raise DomainMismatch(f"{A.domain.name} vs {B.domain.name}")
    if A.n != B.n:
        raise ShapeMismatch(f"{A.n} x {A.n} vs {B.n} x {B.n}")


# -- builders ---------------------------------------------------------------

def zeros(domain: Domain, n: int) -> DMat:
    z = domain.zero()
    return DMat._raw(domain, n, tuple((z,) * n for _ in range(n)))


def identity(domain: Domain, n: int) -> DMat:
    return scalar_matrix(domain, n, domain.one())


def scalar_matrix(domain: Domain, n: int, d: DElem) -> DMat:
    z = domain.zero()
    return DMat._raw(domain, n, tuple(tuple(d if i == j else z for j in range(n)) for i in range(n)))


def elementary(domain: Domain, n: int, i: int, j: int, d: DElem | None = None) -> DMat:
    """``d * E_{i,j}`` with 1-based indices (``d`` defaults to 1)."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise IndexOutOfRange(f"E_({i},{j}) outside {n} x {n}")
    d = domain.one() if d is None else d
    z = domain.zero()
    return DMat._raw(
        domain,
        n,
        tuple(tuple(d if (r, c) == (i - 1, j - 1) else z for c in range(n)) for r in range(n)),
    )


def jordan_nilpotent(domain: Domain, n: int) -> DMat:
    """The single nilpotent Jordan block E_{1,2} + ... + E_{n-1,n}."""
    one, z = domain.one(), domain.zero()
    return DMat._raw(domain, n, tuple(tuple(one if c == r + 1 else z for c in range(n)) for r in range(n)))


def corner(domain: Domain, n: int) -> DMat:
    """M = E_{1,n}."""
    return elementary(domain, n, 1, n)


def builders(domain: Domain, n: int, which: str, i: int | None = None, j: int | None = None) -> DMat:
    if n < 1:
        raise IndexOutOfRange("n must be positive")
    if which == "identity":
        return identity(domain, n)
    if which == "elementary":
        return elementary(domain, n, i, j)
    if which == "jordan_nilpotent":
        return jordan_nilpotent(domain, n)
    if which == "corner":
        return corner(domain, n)
    raise ValueError(f"unknown builder {which!r}")


def from_rows(domain: Domain, rows) -> DMat:
    """Build a matrix from rows of DElem or of raw scalar literals."""
    from .scalars import parse_elem

    return DMat(domain, [[x if isinstance(x, DElem) else parse_elem(domain, x) for x in r] for r in rows])


def diag(domain: Domain, ds: Sequence[DElem]) -> DMat:
    n = len(ds)
    z = domain.zero()
    return DMat._raw(domain, n, tuple(tuple(ds[i] if i == j else z for j in range(n)) for i in range(n)))


# -- ring operations ----------------------------------------------------------

def mat_add(A: DMat, B: DMat) -> DMat:
    _check(A, B)
    return DMat._raw(
        A.domain, A.n, tuple(tuple(d_add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(A.entries, B.entries))
    )


def mat_neg(A: DMat) -> DMat:
    return DMat._raw(A.domain, A.n, tuple(tuple(d_neg(x) for x in r) for r in A.entries))


def mat_mul(A: DMat, B: DMat) -> DMat:
    _check(A, B)
    n = A.n
    dom = A.domain
    cols = list(zip(*B.entries))
    out = []
    for ra in A.entries:
        row = []
        for cb in cols:
            acc = None
            for x, y in zip(ra, cb):
                if x.is_zero() or y.is_zero():
                    continue
                t = d_mul(x, y)
                acc = t if acc is None else d_add(acc, t)
            row.append(dom.zero() if acc is None else acc)
        out.append(tuple(row))
    return DMat._raw(dom, n, tuple(out))


def mat_pow(A: DMat, k: int) -> DMat:
    if k < 0:
        raise ValueError("negative power")
    result = identity(A.domain, A.n)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def scale_left(d: DElem, A: DMat) -> DMat:
    if d.domain != A.domain:
        raise DomainMismatch("scalar and matrix over different domains")
    return DMat._raw(A.domain, A.n, tuple(tuple(d_mul(d, x) for x in r) for r in A.entries))


def scale_right(A: DMat, d: DElem) -> DMat:
    if d.domain != A.domain:
        raise DomainMismatch("scalar and matrix over different domains")
    return DMat._raw(A.domain, A.n, tuple(tuple(d_mul(x, d) for x in r) for r in A.entries))


def mat_op(op: str, A: DMat, B: DMat | None = None, *, d: DElem | None = None, k: int | None = None) -> DMat:
    if op == "add":
        return mat_add(A, B)
    if op == "mul":
        return mat_mul(A, B)
    if op == "neg":
        return mat_neg(A)
    if op == "scale_left":
        return scale_left(d, A)
    if op == "pow":
        return mat_pow(A, k)
    raise ValueError(f"unknown op {op!r}")


def commutator(A: DMat, B: DMat) -> DMat:
    return mat_add(mat_mul(A, B), mat_neg(mat_mul(B, A)))


# -- row reduction over D -----------------------------------------------------

@dataclass(frozen=True)
class RowSpace:
    """A left D-subspace of D^n given by a reduced echelon basis."""

    domain: Domain
    n: int
    basis: tuple
    pivots: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)


def d_rref(rows, ncols: int, domain: Domain):
    """Left reduced row echelon form of rows over D.

    Pivots are normalised to 1 by left multiplication with their inverse; the
    first row (lowest index) with a nonzero entry in a column becomes its pivot.
    """
    M = [list(r) for r in rows]
    M = [r for r in M if any(not x.is_zero() for x in r)]
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and M[piv][c].is_zero():
            piv += 1
        if piv == nrows:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = d_inv(domain, M[r][c])
        row = M[r] = [d_mul(inv, x) for x in M[r]]
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if not f.is_zero():
                    nf = d_neg(f)
                    M[i] = [x if y.is_zero() else d_add(x, d_mul(nf, y)) for x, y in zip(M[i], row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in M[:r]), tuple(pivots)


def row_reduce(A: DMat) -> tuple[RowSpace, int]:
    basis, pivots = d_rref(A.entries, A.n, A.domain)
    return RowSpace(A.domain, A.n, basis, pivots), len(basis)


def rank(A: DMat) -> int:
    return row_reduce(A)[1]


def row_space(domain: Domain, n: int, rows) -> RowSpace:
    basis, pivots = d_rref(rows, n, domain)
    return RowSpace(domain, n, basis, pivots)


def _augmented(A: DMat):
    one, z = A.domain.one(), A.domain.zero()
    n = A.n
    return [tuple(A.entries[i]) + tuple(one if t == i else z for t in range(n)) for i in range(n)]


def kernel_image(A: DMat) -> tuple[RowSpace, RowSpace]:
    """``({v : v A = 0}, {v A})`` as left row spaces."""
    n = A.n
    basis, pivots = d_rref(_augmented(A), 2 * n, A.domain)
    ker = [row[n:] for row, c in zip(basis, pivots) if c >= n]
    image = row_space(A.domain, n, A.entries)
    return row_space(A.domain, n, ker), image


def mat_inv(A: DMat) -> DMat:
    n = A.n
    basis, pivots = d_rref(_augmented(A), 2 * n, A.domain)
    if len(pivots) < n or pivots[n - 1] >= n:
        raise Singular("matrix is not invertible")
    return DMat._raw(A.domain, n, tuple(row[n:] for row in basis[:n]))


def is_invertible(A: DMat) -> bool:
    return rank(A) == A.n


def is_nilpotent(A: DMat) -> bool:
    return mat_pow(A, A.n).is_zero()


def intersect_rowspaces(U: RowSpace, W: RowSpace) -> RowSpace:
    """U intersected with W, computed over Z on flattened coordinates.

    A left D-subspace is also a Z-subspace; its Z-span is generated by
    ``d * u`` for d in the Z-basis of D and u in the D-basis.
    """
    dom = U.domain
    k = dom.z_basis_size
    p = dom.zp

    def zspan(S):
        vecs = [tuple(c for x in row for c in d_mul(d, x).coords) for row in S.basis for d in dom.z_basis()]
        return zlinalg.rref(vecs, U.n * k, p)[0]

    common, _ = zlinalg.intersect(zspan(U), zspan(W), U.n * k, p)
    rows = [tuple(dom.elem(v[t * k:(t + 1) * k]) for t in range(U.n)) for v in common]
    return row_space(dom, U.n, rows)


# -- Z-coordinates ----------------------------------------------------------

def flatten(A: DMat) -> tuple:
    """Z-coordinates: entry (i, j) occupies slots ``(i*n + j)*k ... +k``."""
    return tuple(c for r in A.entries for x in r for c in x.coords)


def unflatten(v, domain: Domain, n: int) -> DMat:
    k = domain.z_basis_size
    if len(v) != n * n * k:
        raise LengthMismatch(f"expected {n * n * k} coordinates, got {len(v)}")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            off = (i * n + j) * k
            row.append(DElem(domain, tuple(domain.zcoerce(c) for c in v[off:off + k])))
        rows.append(tuple(row))
    return DMat._raw(domain, n, tuple(rows))


def min_poly(A: DMat, one: DMat | None = None) -> list:
    """Monic minimal polynomial of ``A`` over Z, coefficients low -> high.

    ``one`` is the identity of the ambient algebra (``I`` by default); passing an
    idempotent ``e`` gives the minimal polynomial of ``A`` inside ``e S e``.
    """
    dom = A.domain
    p = dom.zp
    one = identity(dom, A.n) if one is None else one
    ncols = A.n * A.n * dom.z_basis_size
    powers = [flatten(one)]
    cur = one
    while True:
        cur = mat_mul(cur, A)
        powers.append(flatten(cur))
        ker, _ = zlinalg.left_kernel(powers, ncols, p)
        if ker:
            vec = ker[0]
            lead = vec[-1]
            if p:
                inv = pow(lead, -1, p)
                return [c * inv % p for c in vec]
            return [c / lead for c in vec]


def min_poly_over_Z(A: DMat) -> list:
    return min_poly(A)


def poly_eval(coeffs, A: DMat, one: DMat | None = None) -> DMat:
    """Evaluate a Z-polynomial (low -> high) at ``A`` by Horner's rule."""
    dom = A.domain
    one = identity(dom, A.n) if one is None else one
    acc = zeros(dom, A.n)
    for c in reversed(list(coeffs)):
        acc = mat_add(mat_mul(acc, A), scale_left(dom.scalar(c), one))
    return acc


# -- block helpers ------------------------------------------------------------

def block(A: DMat, lo: int, hi: int) -> DMat:
    """Principal diagonal block on 0-based rows/cols ``lo .. hi-1``."""
    return DMat._raw(A.domain, hi - lo, tuple(tuple(r[lo:hi]) for r in A.entries[lo:hi]))


def is_block_diagonal(A: DMat, r: int) -> bool:
    n = A.n
    return all(
        A.entries[i][j].is_zero() for i in range(n) for j in range(n) if (i < r) != (j < r)
    )


def block_diag(A: DMat, B: DMat) -> DMat:
    if A.domain != B.domain:
        raise DomainMismatch("blocks over different domains")
    z = A.domain.zero()
    n = A.n + B.n
    rows = [tuple(r) + (z,) * B.n for r in A.entries]
    rows += [(z,) * A.n + tuple(r) for r in B.entries]
    return DMat._raw(A.domain, n, tuple(rows))
