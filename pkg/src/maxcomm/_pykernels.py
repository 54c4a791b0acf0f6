"""Pure-Python kernels for arithmetic over F_p.

Reference implementation of the API in ``_ckernels.pyx``.  Matrices are flat
row-major tuples of ints in ``range(p)``.
"""


def rref_modp(rows, ncols, p):
    """Reduced row echelon form over F_p.

    Returns ``(basis, pivots)`` where ``basis`` is a tuple of nonzero rows with
    leading entry 1 and every pivot column cleared.
    """
    M = [[x % p for x in r] for r in rows]
    M = [r for r in M if any(r)]
    nrows = len(M)
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = r
        while piv < nrows and M[piv][c] == 0:
            piv += 1
        if piv == nrows:
            continue
        M[r], M[piv] = M[piv], M[r]
        row = M[r]
        if row[c] != 1:
            inv = pow(row[c], -1, p)
            row = M[r] = [x * inv % p for x in row]
        for i in range(nrows):
            if i != r:
                f = M[i][c]
                if f:
                    M[i] = [(x - f * y) % p for x, y in zip(M[i], row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(x) for x in M[:r]), tuple(pivots)


def matmul_modp(a, b, n, p):
    out = [0] * (n * n)
    for i in range(n):
        for k in range(n):
            aik = a[i * n + k]
            if aik:
                base = k * n
                for j in range(n):
                    out[i * n + j] += aik * b[base + j]
    return tuple(x % p for x in out)


def closure_modp(gens, n, p):
    """Canonical basis of the unital F_p-algebra generated by ``gens``."""
    N = n * n
    ident = tuple(1 if i % (n + 1) == 0 else 0 for i in range(N))
    basis, _ = rref_modp([ident, *gens], N, p)
    while True:
        prods = [matmul_modp(b, g, n, p) for b in basis for g in gens]
        new, _ = rref_modp(list(basis) + prods, N, p)
        if len(new) == len(basis):
            return basis
        basis = new


def commuting_pairs(mats, n, p):
    """All index pairs ``(i, j)`` with ``i < j`` whose matrices commute."""
    out = []
    m = len(mats)
    for i in range(m):
        a = mats[i]
        for j in range(i + 1, m):
            b = mats[j]
            if matmul_modp(a, b, n, p) == matmul_modp(b, a, n, p):
                out.append((i, j))
    return out


def enumerate_subrings(add, mul, m, zero, one, require_one):
    """Bitmasks of subsets closed under ``add`` and ``mul`` and commutative.

    Every mask contains ``zero``; when ``require_one`` it also contains ``one``.
    """
    req = (1 << zero) | ((1 << one) if require_one else 0)
    out = []
    for mask in range(1 << m):
        if mask & req != req:
            continue
        members = [e for e in range(m) if mask >> e & 1]
        ok = True
        for x in members:
            ax = add[x]
            mx = mul[x]
            for y in members:
                if not (mask >> ax[y] & 1 and mask >> mx[y] & 1) or mx[y] != mul[y][x]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            out.append(mask)
    return out


def centralizer_mask(mask, mul, m):
    """Bitmask of the elements commuting with every member of ``mask``."""
    members = [e for e in range(m) if mask >> e & 1]
    out = 0
    for x in range(m):
        if all(mul[x][y] == mul[y][x] for y in members):
            out |= 1 << x
    return out
