# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; keep in lockstep with _pure.py (same API, same results)."""

from itertools import permutations

DEF MAXN = 12


def find_nonassociative_triple(flat, int n):
    """Return the first (a, b, c) with (ab)c != a(bc), or None."""
    cdef int t[MAXN * MAXN]
    cdef int a, b, c, ab
    for a in range(n * n):
        t[a] = flat[a]
    for a in range(n):
        for b in range(n):
            ab = t[a * n + b]
            for c in range(n):
                if t[ab * n + c] != t[a * n + t[b * n + c]]:
                    return (a, b, c)
    return None


cdef bint _decided_ok(int *t, int n, int i, int j) noexcept:
    cdef int v = t[i * n + j]
    cdef int a, b, c, jc, ci, left, right, bj, ib
    for c in range(n):
        jc = t[j * n + c]
        if jc != -1:
            left = t[v * n + c]
            if left != -1:
                right = t[i * n + jc]
                if right != -1 and left != right:
                    return False
        ci = t[c * n + i]
        if ci != -1:
            left = t[ci * n + j]
            if left != -1:
                right = t[c * n + v]
                if right != -1 and left != right:
                    return False
    for a in range(n):
        for b in range(n):
            if t[a * n + b] == i:
                bj = t[b * n + j]
                if bj != -1:
                    right = t[a * n + bj]
                    if right != -1 and v != right:
                        return False
    for b in range(n):
        ib = t[i * n + b]
        if ib == -1:
            continue
        for c in range(n):
            if t[b * n + c] == j:
                left = t[ib * n + c]
                if left != -1 and left != v:
                    return False
    return True


cdef void _enum_rec(int *t, int n, int *free_i, int *free_j, int nfree,
                    int k, bint commutative, list out):
    cdef int i, j, v
    cdef bint good
    if k == nfree:
        out.append(bytes(bytearray([t[i] for i in range(n * n)])))
        return
    i = free_i[k]
    j = free_j[k]
    for v in range(n):
        t[i * n + j] = v
        if commutative:
            t[j * n + i] = v
        good = _decided_ok(t, n, i, j)
        if good and commutative and i != j:
            good = _decided_ok(t, n, j, i)
        if good:
            _enum_rec(t, n, free_i, free_j, nfree, k + 1, commutative, out)
    t[i * n + j] = -1
    if commutative and i != j:
        t[j * n + i] = -1


def enumerate_tables(int n, bint identity0=False, bint commutative=False,
                     bint idempotent=False):
    """List all associative tables on n points as flat bytes, in search order.

    identity0 pins index 0 as a two-sided identity, idempotent forces
    x*x = x, commutative mirrors the table across the diagonal.
    """
    cdef int t[MAXN * MAXN]
    cdef int free_i[MAXN * MAXN]
    cdef int free_j[MAXN * MAXN]
    cdef int i, j, k, nfree
    if n > MAXN:
        raise ValueError("kernel supports tables up to order %d" % MAXN)
    for i in range(n * n):
        t[i] = -1
    if identity0:
        for k in range(n):
            t[k] = k
            t[k * n] = k
    if idempotent:
        for k in range(n):
            t[k * n + k] = k
    nfree = 0
    for i in range(n):
        for j in range(n):
            if t[i * n + j] == -1 and not (commutative and j < i):
                free_i[nfree] = i
                free_j[nfree] = j
                nfree += 1
    out = []
    _enum_rec(t, n, free_i, free_j, nfree, 0, commutative, out)
    return out


def canonical_table(flat, int n, bint fix_first=False):
    """Minimum relabeling of the table over all permutations, as bytes."""
    cdef int t[MAXN * MAXN]
    cdef int p[MAXN]
    cdef int i, j
    cdef bytes best = None, cur
    cand = bytearray(n * n)
    for i in range(n * n):
        t[i] = flat[i]
    if fix_first:
        perm_iter = ((0,) + rest for rest in permutations(range(1, n)))
    else:
        perm_iter = permutations(range(n))
    for perm in perm_iter:
        for i in range(n):
            p[i] = perm[i]
        for i in range(n):
            for j in range(n):
                cand[p[i] * n + p[j]] = p[t[i * n + j]]
        cur = bytes(cand)
        if best is None or cur < best:
            best = cur
    return best


def rstar_matrix(flat, int n):
    """Boolean matrix (flat bytes) of the R* relation via right-translation kernels."""
    cdef int t[MAXN * MAXN]
    cdef int sig[MAXN][MAXN + 1]
    cdef int labels[MAXN]
    cdef int i, a, x, e, identity, m, value, nxt
    cdef bint isid
    for i in range(n * n):
        t[i] = flat[i]
    identity = -1
    for e in range(n):
        isid = True
        for x in range(n):
            if t[e * n + x] != x or t[x * n + e] != x:
                isid = False
                break
        if isid:
            identity = e
            break
    m = n if identity != -1 else n + 1
    for a in range(n):
        for x in range(n):
            labels[x] = -1
        nxt = 0
        for x in range(m):
            value = t[x * n + a] if x < n else a
            if labels[value] == -1:
                labels[value] = nxt
                nxt += 1
            sig[a][x] = labels[value]
    out = bytearray(n * n)
    for a in range(n):
        for x in range(n):
            isid = True
            for i in range(m):
                if sig[a][i] != sig[x][i]:
                    isid = False
                    break
            if isid:
                out[a * n + x] = 1
    return bytes(out)
