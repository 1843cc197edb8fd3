"""Green's relations, the R* relation, the plus operation, and left-ample recognition."""

from functools import lru_cache

from .errors import ConsistencyError, InputError
from .kernels import rstar_matrix
from .tables import FiniteSemigroup

_CACHE_SIZE = 512


class RelationTable:
    """A named binary relation on element indices, stored as a boolean matrix."""

    __slots__ = ("kind", "matrix")

    def __init__(self, kind, matrix):
        matrix = tuple(tuple(bool(v) for v in row) for row in matrix)
        n = len(matrix)
        if any(len(row) != n for row in matrix):
            raise InputError("relation matrix must be square")
        object.__setattr__(self, "kind", kind)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("RelationTable is immutable")

    @property
    def order(self):
        return len(self.matrix)

    def related(self, a, b):
        return self.matrix[a][b]

    def pairs(self):
        """All related pairs (i, j), sorted."""
        return [(i, j) for i, row in enumerate(self.matrix) for j, v in enumerate(row) if v]

    def is_reflexive(self):
        return all(self.matrix[i][i] for i in range(self.order))

    def is_symmetric(self):
        m = self.matrix
        return all(m[i][j] == m[j][i] for i in range(self.order) for j in range(i))

    def is_transitive(self):
        m = self.matrix
        n = self.order
        for i in range(n):
            for j in range(n):
                if m[i][j] and any(m[j][k] and not m[i][k] for k in range(n)):
                    return False
        return True

    def is_equivalence(self):
        return self.is_reflexive() and self.is_symmetric() and self.is_transitive()

    def is_identity(self):
        m = self.matrix
        return all(m[i][j] == (i == j) for i in range(self.order) for j in range(self.order))

    def is_universal(self):
        return all(all(row) for row in self.matrix)

    def classes(self):
        """The partition into equivalence classes, each a sorted tuple, ordered by least member."""
        if not self.is_equivalence():
            raise InputError("relation %r is not an equivalence" % self.kind)
        seen = set()
        out = []
        for i in range(self.order):
            if i in seen:
                continue
            cls = tuple(j for j in range(self.order) if self.matrix[i][j])
            seen.update(cls)
            out.append(cls)
        return out

    def class_of(self, a):
        return tuple(j for j in range(self.order) if self.matrix[a][j])

    def meet(self, other, kind=None):
        """The intersection of two relations."""
        if other.order != self.order:
            raise InputError("relation order mismatch")
        m = tuple(
            tuple(x and y for x, y in zip(row, orow))
            for row, orow in zip(self.matrix, other.matrix)
        )
        return RelationTable(kind or "%s^%s" % (self.kind, other.kind), m)

    def restrict(self, members, kind=None):
        """The relation induced on a subset, reindexed by position in sorted(members)."""
        idx = sorted(members)
        m = tuple(tuple(self.matrix[i][j] for j in idx) for i in idx)
        return RelationTable(kind or self.kind, m)

    def to_text(self):
        lines = [self.kind]
        lines.extend("%d %d" % p for p in self.pairs())
        return "\n".join(lines) + "\n"

    def __eq__(self, other):
        return isinstance(other, RelationTable) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        return "RelationTable(%r, order=%d, pairs=%d)" % (
            self.kind,
            self.order,
            sum(sum(row) for row in self.matrix),
        )


def compose_relations(first, second, kind=None):
    """Relational composition: i related to j iff i first k and k second j for some k."""
    if first.order != second.order:
        raise InputError("relation order mismatch")
    n = first.order
    a, b = first.matrix, second.matrix
    m = tuple(
        tuple(any(a[i][k] and b[k][j] for k in range(n)) for j in range(n)) for i in range(n)
    )
    return RelationTable(kind or "%s*%s" % (first.kind, second.kind), m)


def _right_ideals(s):
    """aS^1 for each a: the element together with all right multiples."""
    n = s.order
    return [frozenset([a]) | frozenset(s.mul(a, x) for x in range(n)) for a in range(n)]


def _left_ideals(s):
    n = s.order
    return [frozenset([a]) | frozenset(s.mul(x, a) for x in range(n)) for a in range(n)]


def _two_sided_ideals(s):
    n = s.order
    out = []
    for a in range(n):
        ideal = {a}
        ideal.update(s.mul(a, x) for x in range(n))
        ideal.update(s.mul(x, a) for x in range(n))
        ideal.update(s.mul(s.mul(x, a), y) for x in range(n) for y in range(n))
        out.append(frozenset(ideal))
    return out


def green(s):
    """Green's relations and quasi-orders of a finite semigroup.

    Returns a dict with keys R, L, H, D, J, leqR, leqL.  a leqR b means
    aS^1 is contained in bS^1, and R/L/J are the equivalences of the
    corresponding ideal quasi-orders; H = R meet L and D = R composed
    with L.
    """
    return dict(_green_items(s))


@lru_cache(maxsize=_CACHE_SIZE)
def _green_items(s):
    n = s.order
    rights = _right_ideals(s)
    lefts = _left_ideals(s)
    twos = _two_sided_ideals(s)
    leq_r = RelationTable(
        "leqR", [[rights[a] <= rights[b] for b in range(n)] for a in range(n)]
    )
    leq_l = RelationTable(
        "leqL", [[lefts[a] <= lefts[b] for b in range(n)] for a in range(n)]
    )
    r = RelationTable("R", [[rights[a] == rights[b] for b in range(n)] for a in range(n)])
    l = RelationTable("L", [[lefts[a] == lefts[b] for b in range(n)] for a in range(n)])
    h = r.meet(l, kind="H")
    d = compose_relations(r, l, kind="D")
    d_other = compose_relations(l, r, kind="D")
    if d != d_other:
        raise ConsistencyError("R*L and L*R composites disagree on a finite semigroup")
    j = RelationTable("J", [[twos[a] == twos[b] for b in range(n)] for a in range(n)])
    return (
        ("R", r),
        ("L", l),
        ("H", h),
        ("D", d),
        ("J", j),
        ("leqR", leq_r),
        ("leqL", leq_l),
    )


@lru_cache(maxsize=_CACHE_SIZE)
def r_star(s):
    """The relation identifying a and b when xa = ya and xb = yb have the same solutions.

    Solutions (x, y) range over S with an identity adjoined when S lacks one.
    Contains R, and coincides with R on regular semigroups.
    """
    n = s.order
    flat = rstar_matrix(s.flat(), n)
    matrix = [[bool(flat[a * n + b]) for b in range(n)] for a in range(n)]
    return RelationTable("Rstar", matrix)


def idempotents_commute(s):
    """Whether E(S) is a semilattice; returns (True, None) or (False, (e, f))."""
    idem = s.idempotents()
    for e in idem:
        for f in idem:
            if s.mul(e, f) != s.mul(f, e):
                return False, (e, f)
    return True, None


def plus_of(s, a):
    """The unique idempotent in the same Rstar-class as a, or None if the class has none.

    Requires commuting idempotents, which is what makes the idempotent unique.
    """
    ok, pair = idempotents_commute(s)
    if not ok:
        raise InputError(
            "plus is only defined when idempotents commute; %d and %d do not" % pair
        )
    rs = r_star(s)
    found = [e for e in s.idempotents() if rs.related(a, e)]
    if not found:
        return None
    if len(found) > 1:
        raise ConsistencyError(
            "two idempotents %d and %d share an Rstar-class despite commuting idempotents"
            % (found[0], found[1])
        )
    return found[0]


@lru_cache(maxsize=_CACHE_SIZE)
def plus_table(s):
    """plus_of for every element at once, as a tuple with None for classes lacking an idempotent."""
    ok, pair = idempotents_commute(s)
    if not ok:
        raise InputError(
            "plus is only defined when idempotents commute; %d and %d do not" % pair
        )
    rs = r_star(s)
    idem = s.idempotents()
    out = []
    for a in range(s.order):
        found = [e for e in idem if rs.related(a, e)]
        if len(found) > 1:
            raise ConsistencyError(
                "two idempotents %d and %d share an Rstar-class despite commuting idempotents"
                % (found[0], found[1])
            )
        out.append(found[0] if found else None)
    return tuple(out)


class AmpleReport:
    """Outcome of the left-ample check, with the failed clause and witness on failure."""

    __slots__ = ("ok", "clause", "witness")

    def __init__(self, ok, clause=None, witness=None):
        self.ok = ok
        self.clause = clause
        self.witness = witness

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "AmpleReport(ok=True)"
        return "AmpleReport(ok=False, clause=%r, witness=%r)" % (self.clause, self.witness)


@lru_cache(maxsize=_CACHE_SIZE)
def is_left_ample(s):
    """Check that S is left ample.

    Three clauses, reported in order of failure: the idempotents commute,
    every Rstar-class contains an idempotent, and x(y+) = (x(y+))+ x holds
    for all x, y.
    """
    ok, pair = idempotents_commute(s)
    if not ok:
        return AmpleReport(False, "idempotents_commute", pair)
    plus = plus_table(s)
    for a, p in enumerate(plus):
        if p is None:
            return AmpleReport(False, "missing_plus", (a,))
    for x in range(s.order):
        for y in range(s.order):
            lhs = s.mul(x, plus[y])
            if lhs != s.mul(plus[lhs], x):
                return AmpleReport(False, "ample_identity", (x, y))
    return AmpleReport(True)


def check_rstar_l_commute(s):
    """Whether Rstar composed with L equals L composed with Rstar."""
    rs = r_star(s)
    l = green(s)["L"]
    return compose_relations(rs, l) == compose_relations(l, rs)


def is_right_cancellative(s):
    """Whether xa = ya forces x = y."""
    n = s.order
    for a in range(n):
        seen = {}
        for x in range(n):
            p = s.mul(x, a)
            if p in seen and seen[p] != x:
                return False
            seen[p] = x
    return True


def is_left_cancellative(s):
    n = s.order
    for a in range(n):
        seen = {}
        for x in range(n):
            p = s.mul(a, x)
            if p in seen and seen[p] != x:
                return False
            seen[p] = x
    return True


def is_cancellative(s):
    return is_right_cancellative(s) and is_left_cancellative(s)
