"""Univariate polynomials over Z = Q or F_p.

Coefficient lists run from the constant term upward; ``p == 0`` selects Q.
Only factorisation is delegated (to sympy); the rest is a few lines each.
"""
from __future__ import annotations

from fractions import Fraction


def trim(f, p: int = 0) -> list:
    f = [c % p for c in f] if p else list(f)
    while f and not f[-1]:
        f.pop()
    return f


def deg(f) -> int:
    return len(f) - 1


def _inv(c, p):
    return pow(c, -1, p) if p else 1 / Fraction(c)


def monic(f, p: int = 0) -> list:
    f = trim(f, p)
    if not f:
        return f
    inv = _inv(f[-1], p)
    return [c * inv % p for c in f] if p else [c * inv for c in f]


def add(f, g, p: int = 0) -> list:
    n = max(len(f), len(g))
    return trim([(f[i] if i < len(f) else 0) + (g[i] if i < len(g) else 0) for i in range(n)], p)


def sub(f, g, p: int = 0) -> list:
    return add(f, [-c for c in g], p)


def mul(f, g, p: int = 0) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return trim(out, p)


def divmod_(f, g, p: int = 0):
    f = trim(f, p)
    g = trim(g, p)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    inv = _inv(g[-1], p)
    q = [0] * max(len(f) - len(g) + 1, 0)
    r = list(f)
    while len(r) >= len(g) and r:
        c = r[-1] * inv
        if p:
            c %= p
        shift = len(r) - len(g)
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] -= c * b
        r = trim(r, p)
    return trim(q, p), r


def gcd(f, g, p: int = 0) -> list:
    f, g = trim(f, p), trim(g, p)
    while g:
        f, g = g, divmod_(f, g, p)[1]
    return monic(f, p)


def xgcd(f, g, p: int = 0):
    """``(d, s, t)`` with ``s*f + t*g = d`` and ``d`` monic."""
    r0, r1 = trim(f, p), trim(g, p)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    inv = _inv(r0[-1], p)
    scale = [inv % p] if p else [inv]
    return mul(r0, scale, p), mul(s0, scale, p), mul(t0, scale, p)


def derivative(f, p: int = 0) -> list:
    return trim([i * c for i, c in enumerate(f)][1:], p)


def _pth_root(f, p):
    # over F_p every coefficient is its own p-th root
    return [f[i] for i in range(0, len(f), p)]


def radical(f, p: int = 0) -> list:
    """Monic squarefree part: the product of the distinct irreducible factors."""
    f = monic(f, p)
    if len(f) <= 1:
        return [1] if f else []
    df = derivative(f, p)
    if not df:
        return radical(_pth_root(f, p), p)
    g = gcd(f, df, p)
    h = monic(divmod_(f, g, p)[0], p)
    if len(g) <= 1:
        return h
    rg = radical(g, p)
    common = gcd(h, rg, p)
    return monic(divmod_(mul(h, rg, p), common, p)[0], p)


def factor(f, p: int = 0) -> list[tuple[list, int]]:
    """Monic irreducible factors with multiplicities."""
    import sympy

    x = sympy.Symbol("x")
    f = monic(f, p)
    if len(f) <= 1:
        return []
    hi = list(reversed(f))
    if p:
        P = sympy.Poly([int(c) for c in hi], x, modulus=p)
    else:
        P = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in map(Fraction, hi)], x, domain="QQ")
    _, facs = P.factor_list()
    out = []
    for g, m in facs:
        cs = list(reversed(g.all_coeffs()))
        if p:
            cs = [int(c) % p for c in cs]
        else:
            cs = [Fraction(int(sympy.numer(c)), int(sympy.denom(c))) for c in cs]
        out.append((monic(cs, p), m))
    out.sort(key=lambda t: (len(t[0]), [str(c) for c in t[0]]))
    return out


def power(f, k: int, p: int = 0) -> list:
    out = [1]
    for _ in range(k):
        out = mul(out, f, p)
    return out
