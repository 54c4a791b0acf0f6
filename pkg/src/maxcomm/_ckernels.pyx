# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for arithmetic over F_p.

Same API and results as ``maxcomm._pykernels``.  All buffers hold values in
``[0, p)``; subtraction is written as addition of ``p - f`` so that C
remainder semantics never see a negative operand.
"""
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset


cdef inline long _inv(long a, long p) nogil:
    cdef long t = 0, newt = 1, r = p, newr = a % p, q, tmp
    while newr != 0:
        q = r // newr
        tmp = t - q * newt
        t = newt
        newt = tmp
        tmp = r - q * newr
        r = newr
        newr = tmp
    if t < 0:
        t += p
    return t


cdef int _rref(long* M, int nrows, int ncols, long p, int* pivots) nogil:
    cdef int r = 0, c, i, j, piv
    cdef long inv, f, tmp
    cdef long* rowr
    cdef long* rowi
    for c in range(ncols):
        if r == nrows:
            break
        piv = -1
        for i in range(r, nrows):
            if M[i * ncols + c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(ncols):
                tmp = M[r * ncols + j]
                M[r * ncols + j] = M[piv * ncols + j]
                M[piv * ncols + j] = tmp
        rowr = M + r * ncols
        if rowr[c] != 1:
            inv = _inv(rowr[c], p)
            for j in range(c, ncols):
                rowr[j] = rowr[j] * inv % p
        for i in range(nrows):
            if i == r:
                continue
            rowi = M + i * ncols
            f = rowi[c]
            if f != 0:
                f = p - f
                for j in range(c, ncols):
                    rowi[j] = (rowi[j] + f * rowr[j]) % p
        pivots[r] = c
        r += 1
    return r


cdef void _matmul(long* A, long* B, long* C, int n, long p) nogil:
    cdef int i, j, k
    cdef long s
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s += A[i * n + k] * B[k * n + j]
            C[i * n + j] = s % p


cdef long* _load(rows, int ncols, long p, int* nrows_out) except NULL:
    cdef int nrows = len(rows), i, j
    cdef long* M = <long*> malloc((nrows if nrows > 0 else 1) * ncols * sizeof(long) + sizeof(long))
    if M == NULL:
        raise MemoryError()
    for i in range(nrows):
        r = rows[i]
        for j in range(ncols):
            M[i * ncols + j] = r[j] % p
    nrows_out[0] = nrows
    return M


cdef tuple _rows_out(long* M, int rank, int ncols):
    return tuple(tuple(M[i * ncols + j] for j in range(ncols)) for i in range(rank))


def rref_modp(rows, int ncols, long p):
    cdef int nrows, rank
    cdef long* M = _load(rows, ncols, p, &nrows)
    cdef int* piv = <int*> malloc((ncols + 1) * sizeof(int))
    try:
        rank = _rref(M, nrows, ncols, p, piv)
        return _rows_out(M, rank, ncols), tuple(piv[i] for i in range(rank))
    finally:
        free(M)
        free(piv)


def matmul_modp(a, b, int n, long p):
    cdef int N = n * n, i
    cdef long* A = <long*> malloc(3 * N * sizeof(long))
    try:
        for i in range(N):
            A[i] = a[i]
            A[N + i] = b[i]
        _matmul(A, A + N, A + 2 * N, n, p)
        return tuple(A[2 * N + i] for i in range(N))
    finally:
        free(A)


def closure_modp(gens, int n, long p):
    cdef int N = n * n, g = len(gens), i, j, b, t, rank, newrank, rows
    cdef int maxrows = N + N * g + g + 1
    cdef long* M = <long*> malloc(maxrows * N * sizeof(long))
    cdef long* G = <long*> malloc((g + 1) * N * sizeof(long))
    cdef int* piv = <int*> malloc((N + 1) * sizeof(int))
    try:
        memset(M, 0, maxrows * N * sizeof(long))
        for i in range(n):
            M[i * n + i] = 1 % p
        for t in range(g):
            r = gens[t]
            for j in range(N):
                G[t * N + j] = r[j] % p
                M[(t + 1) * N + j] = G[t * N + j]
        rank = _rref(M, g + 1, N, p, piv)
        while True:
            rows = rank
            for b in range(rank):
                for t in range(g):
                    _matmul(M + b * N, G + t * N, M + rows * N, n, p)
                    rows += 1
            newrank = _rref(M, rows, N, p, piv)
            if newrank == rank:
                return _rows_out(M, rank, N)
            rank = newrank
    finally:
        free(M)
        free(G)
        free(piv)


def commuting_pairs(mats, int n, long p):
    cdef int m = len(mats), N = n * n, i, j, k
    cdef bint same
    cdef long* A = <long*> malloc((m * N + 2 * N + 1) * sizeof(long))
    cdef long* P = A + m * N
    cdef long* Q = P + N
    out = []
    try:
        for i in range(m):
            r = mats[i]
            for k in range(N):
                A[i * N + k] = r[k] % p
        for i in range(m):
            for j in range(i + 1, m):
                _matmul(A + i * N, A + j * N, P, n, p)
                _matmul(A + j * N, A + i * N, Q, n, p)
                same = True
                for k in range(N):
                    if P[k] != Q[k]:
                        same = False
                        break
                if same:
                    out.append((i, j))
        return out
    finally:
        free(A)


def enumerate_subrings(add, mul, int m, int zero, int one, bint require_one):
    cdef int Ad[30][30]
    cdef int Mu[30][30]
    cdef int members[30]
    cdef int i, j, cnt, x, y
    cdef unsigned long mask, total = (<unsigned long> 1) << m, req
    cdef bint ok
    if m > 30:
        raise ValueError("at most 30 elements supported")
    for i in range(m):
        for j in range(m):
            Ad[i][j] = add[i][j]
            Mu[i][j] = mul[i][j]
    req = (<unsigned long> 1) << zero
    if require_one:
        req |= (<unsigned long> 1) << one
    out = []
    mask = 0
    while mask < total:
        if (mask & req) == req:
            cnt = 0
            for i in range(m):
                if (mask >> i) & 1:
                    members[cnt] = i
                    cnt += 1
            ok = True
            for i in range(cnt):
                x = members[i]
                for j in range(cnt):
                    y = members[j]
                    if not ((mask >> Ad[x][y]) & 1) or not ((mask >> Mu[x][y]) & 1) or Mu[x][y] != Mu[y][x]:
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                out.append(mask)
        mask += 1
    return out


def centralizer_mask(unsigned long mask, mul, int m):
    cdef int x, y
    cdef unsigned long out = 0
    cdef bint ok
    for x in range(m):
        ok = True
        for y in range(m):
            if (mask >> y) & 1 and mul[x][y] != mul[y][x]:
                ok = False
                break
        if ok:
            out |= (<unsigned long> 1) << x
    return out
