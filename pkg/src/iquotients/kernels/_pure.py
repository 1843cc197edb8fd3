"""Pure-Python twins of the compiled kernels.

Cayley tables cross the kernel boundary as flat row-major sequences of
length n*n holding values in 0..n-1.  Results come back as bytes so both
backends return identical objects.  During the backtracking search -1 marks
an unassigned cell; finished tables never contain it.
"""

from itertools import permutations


def find_nonassociative_triple(flat, n):
    """Return the first (a, b, c) with (ab)c != a(bc), or None."""
    for a in range(n):
        row_a = a * n
        for b in range(n):
            ab = flat[row_a + b]
            row_b = b * n
            for c in range(n):
                if flat[ab * n + c] != flat[row_a + flat[row_b + c]]:
                    return (a, b, c)
    return None


def _decided_ok(t, n, i, j):
    # Check every triple that the assignment (i, j) may have just decided.
    # A triple (a, b, c) needs cells (a,b), (b,c), (ab,c), (a,bc); it is
    # examined when its last missing cell gets a value, so each full table
    # has had every triple checked exactly once along the search path.
    v = t[i * n + j]
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
        row = a * n
        for b in range(n):
            if t[row + b] == i:
                bj = t[b * n + j]
                if bj != -1:
                    right = t[row + bj]
                    if right != -1 and v != right:
                        return False
    for b in range(n):
        ib = t[i * n + b]
        if ib == -1:
            continue
        row = b * n
        for c in range(n):
            if t[row + c] == j:
                left = t[ib * n + c]
                if left != -1 and left != v:
                    return False
    return True


def enumerate_tables(n, identity0=False, commutative=False, idempotent=False):
    """List all associative tables on n points as flat bytes, in search order.

    identity0 pins index 0 as a two-sided identity, idempotent forces
    x*x = x, commutative mirrors the table across the diagonal.  Cells are
    filled row-major with incremental associativity pruning.
    """
    t = [-1] * (n * n)
    if identity0:
        for k in range(n):
            t[k] = k
            t[k * n] = k
    if idempotent:
        for k in range(n):
            t[k * n + k] = k
    free = [
        (i, j)
        for i in range(n)
        for j in range(n)
        if t[i * n + j] == -1 and not (commutative and j < i)
    ]
    out = []

    def rec(k):
        if k == len(free):
            out.append(bytes(t))
            return
        i, j = free[k]
        for v in range(n):
            t[i * n + j] = v
            if commutative:
                t[j * n + i] = v
            good = _decided_ok(t, n, i, j)
            if good and commutative and i != j:
                good = _decided_ok(t, n, j, i)
            if good:
                rec(k + 1)
        t[i * n + j] = -1
        if commutative and i != j:
            t[j * n + i] = -1

    rec(0)
    return out


def canonical_table(flat, n, fix_first=False):
    """Minimum relabeling of the table over all permutations, as bytes.

    With fix_first only permutations keeping index 0 in place are tried
    (used when index 0 is structurally pinned, e.g. a chosen identity).
    """
    best = None
    if fix_first:
        perms = (
            (0,) + rest for rest in permutations(range(1, n))
        )
    else:
        perms = permutations(range(n))
    for p in perms:
        cand = bytearray(n * n)
        for i in range(n):
            row = i * n
            pi = p[i] * n
            for j in range(n):
                cand[pi + p[j]] = p[flat[row + j]]
        cand = bytes(cand)
        if best is None or cand < best:
            best = cand
    return best


def rstar_matrix(flat, n):
    """Boolean matrix (flat bytes) of the R* relation.

    a R* b holds when x*a = y*a and x*b = y*b have the same solution sets
    over the semigroup with an identity adjoined when none is present;
    equivalently the kernels of the right-translation maps coincide.
    """
    identity = -1
    for e in range(n):
        if all(flat[e * n + x] == x and flat[x * n + e] == x for x in range(n)):
            identity = e
            break
    # kernel signature of x -> x*a over S (plus the formal identity row)
    sigs = []
    for a in range(n):
        col = [flat[x * n + a] for x in range(n)]
        if identity == -1:
            col.append(a)
        labels = {}
        sig = []
        for value in col:
            if value not in labels:
                labels[value] = len(labels)
            sig.append(labels[value])
        sigs.append(tuple(sig))
    out = bytearray(n * n)
    for a in range(n):
        for b in range(n):
            if sigs[a] == sigs[b]:
                out[a * n + b] = 1
    return bytes(out)
