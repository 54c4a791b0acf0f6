"""Row reduction over the center Z.

``p == 0`` means Z = Q with :class:`~fractions.Fraction` entries; ``p > 0``
means Z = F_p and the work is delegated to :mod:`maxcomm.kernels`.  Vectors
are tuples; a subspace is carried as a canonical reduced echelon basis plus
its pivot columns.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

from . import kernels

_ZERO = Fraction(0)


def _primitive(row: list) -> list:
    g = 0
    for x in row:
        if x:
            g = gcd(g, x)
            if g == 1:
                return row
    return [x // g for x in row] if g > 1 else row


def _rref_q(rows, ncols):
    """Fraction-free elimination on integer rows, normalised at the end."""
    M = []
    for r in rows:
        r = [Fraction(x) for x in r]
        if not any(r):
            continue
        den = lcm(*(x.denominator for x in r))
        M.append([x.numerator * (den // x.denominator) for x in r])
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and not M[piv][c]:
            piv += 1
        if piv == nrows:
            continue
        M[r], M[piv] = M[piv], M[r]
        row = M[r] = _primitive(M[r])
        lead = row[c]
        nz = [j for j in range(c, ncols) if row[j]]
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if f:
                    g = gcd(lead, f)
                    a, b = lead // g, f // g
                    Mi = M[i]
                    if a != 1:
                        Mi = [a * x for x in Mi]
                    for j in nz:
                        Mi[j] -= b * row[j]
                    M[i] = Mi
        pivots.append(c)
        r += 1
    out = []
    for row, c in zip(M[:r], pivots):
        lead = row[c]
        out.append(tuple(Fraction(x, lead) if x else _ZERO for x in row))
    return tuple(out), tuple(pivots)


def rref(rows, ncols: int, p: int):
    """Canonical reduced row echelon basis of the span of ``rows``."""
    if p:
        return kernels.rref_modp(rows, ncols, p)
    return _rref_q(rows, ncols)


def zero_vec(ncols: int, p: int) -> tuple:
    return (0,) * ncols if p else (_ZERO,) * ncols


def left_kernel(rows, ncols: int, p: int):
    """Canonical basis of ``{x : sum_i x_i * rows[i] = 0}``."""
    m = len(rows)
    if m == 0:
        return (), ()
    one = 1 if p else Fraction(1)
    zero = 0 if p else _ZERO
    aug = [
        tuple(r) + tuple(one if t == i else zero for t in range(m))
        for i, r in enumerate(rows)
    ]
    basis, pivots = rref(aug, ncols + m, p)
    ker = [row[ncols:] for row, c in zip(basis, pivots) if c >= ncols]
    return rref(ker, m, p)


def reduce(v, basis, pivots, p: int) -> tuple:
    """Remainder of ``v`` after clearing the pivot columns of ``basis``."""
    v = list(v)
    for row, c in zip(basis, pivots):
        f = v[c]
        if f:
            if p:
                v = [(x - f * y) % p for x, y in zip(v, row)]
            else:
                v = [x - f * y for x, y in zip(v, row)]
    return tuple(v)


def contains(basis, pivots, v, p: int) -> bool:
    return not any(reduce(v, basis, pivots, p))


def coordinates(basis, pivots, v) -> tuple:
    """Coefficients of ``v`` in a reduced echelon ``basis`` (``v`` must lie in the span)."""
    return tuple(v[c] for c in pivots)


def combine(coeffs, basis, ncols: int, p: int) -> tuple:
    out = list(zero_vec(ncols, p))
    for c, row in zip(coeffs, basis):
        if c:
            for j, y in enumerate(row):
                if y:
                    out[j] += c * y
    if p:
        return tuple(x % p for x in out)
    return tuple(out)


def intersect(b1, b2, ncols: int, p: int):
    """Canonical basis of span(b1) intersected with span(b2)."""
    ker, _ = left_kernel(list(b1) + list(b2), ncols, p)
    k = len(b1)
    vecs = [combine(x[:k], b1, ncols, p) for x in ker]
    return rref(vecs, ncols, p)
